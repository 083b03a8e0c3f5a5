#pragma once
#include <map>
#include <string>
#include <string_view>

#include "protori/numeric.hpp"

namespace protori {

// Formal product Π p^{n_p}: finitely many exceptions over a default of 0 or ∞.
class Supernatural {
 public:
  Supernatural() = default;  // the number 1
  Supernatural(std::map<Prime, Exponent> exceptions, bool default_inf);

  static Supernatural one() { return {}; }
  static Supernatural zhat() { return Supernatural({}, true); }  // Π_p p^∞
  static Supernatural prime_power(Prime p, Exponent e);
  static Supernatural of(const Integer& n);

  // no primality check; see sn_p_exponent
  Exponent at(Prime p) const;
  Exponent default_exponent() const { return default_inf_ ? kInf : 0; }
  bool default_inf() const { return default_inf_; }
  const std::map<Prime, Exponent>& exceptions() const { return exc_; }

  bool is_one() const { return !default_inf_ && exc_.empty(); }
  bool is_finite() const;  // an ordinary positive integer
  Integer value() const;   // requires is_finite()
  bool has_infinite() const;

  std::string str() const;
  bool operator==(const Supernatural&) const = default;

 private:
  std::map<Prime, Exponent> exc_;
  bool default_inf_ = false;
};

Exponent sn_p_exponent(const Supernatural& s, Prime p);
Supernatural sn_mul(const Supernatural& a, const Supernatural& b);
Supernatural sn_gcd(const Supernatural& a, const Supernatural& b);
Supernatural sn_lcm(const Supernatural& a, const Supernatural& b);
bool sn_divides(const Supernatural& a, const Supernatural& b);
bool sn_equivalent(const Supernatural& a, const Supernatural& b);

// `p1^e1 * p2^e2 [default 0|inf]`; a bare p means p^1 and `1` is the empty product
Supernatural parse_supernatural(std::string_view text);

// Height sequence modulo finite-finite disagreement at finitely many primes.
class TypeClass {
 public:
  explicit TypeClass(Supernatural rep) : rep_(std::move(rep)) {}
  const Supernatural& representative() const { return rep_; }
  // finite exponents all set to 0
  Supernatural canonical() const;
  bool operator==(const TypeClass& o) const { return sn_equivalent(rep_, o.rep_); }
  std::string str() const { return canonical().str(); }

 private:
  Supernatural rep_;
};

}  // namespace protori
