#include "protori/supernatural.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "protori/errors.hpp"

namespace protori {

Supernatural::Supernatural(std::map<Prime, Exponent> exceptions, bool default_inf)
    : default_inf_(default_inf) {
  const Exponent dflt = default_exponent();
  for (auto& [p, e] : exceptions) {
    if (e < 0) throw InputError("negative exponent");
    if (e != dflt) exc_.emplace(p, e);
  }
}

Supernatural Supernatural::prime_power(Prime p, Exponent e) { return Supernatural({{p, e}}, false); }

Supernatural Supernatural::of(const Integer& n) {
  if (n <= 0) throw InputError("supernatural of a non-positive integer");
  std::map<Prime, Exponent> m;
  for (Prime p : prime_factors(n)) m[p] = valuation(n, p);
  return Supernatural(std::move(m), false);
}

Exponent Supernatural::at(Prime p) const {
  auto it = exc_.find(p);
  return it == exc_.end() ? default_exponent() : it->second;
}

bool Supernatural::is_finite() const {
  if (default_inf_) return false;
  return std::none_of(exc_.begin(), exc_.end(), [](auto& kv) { return kv.second == kInf; });
}

bool Supernatural::has_infinite() const {
  return default_inf_ || std::any_of(exc_.begin(), exc_.end(), [](auto& kv) { return kv.second == kInf; });
}

Integer Supernatural::value() const {
  if (!is_finite()) throw InputError("value of an infinite supernatural number");
  Integer v = 1;
  for (auto& [p, e] : exc_) v *= ipow(p, e);
  return v;
}

std::string Supernatural::str() const {
  std::string s;
  for (auto& [p, e] : exc_) {
    if (!s.empty()) s += " * ";
    s += std::to_string(p) + "^" + ex_str(e);
  }
  if (default_inf_) return s.empty() ? "1 default inf" : s + " default inf";
  return s.empty() ? "1" : s;
}

Exponent sn_p_exponent(const Supernatural& s, Prime p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  return s.at(p);
}

namespace {
template <class F>
Supernatural pointwise(const Supernatural& a, const Supernatural& b, bool dflt, F f) {
  std::set<Prime> keys;
  for (auto& kv : a.exceptions()) keys.insert(kv.first);
  for (auto& kv : b.exceptions()) keys.insert(kv.first);
  std::map<Prime, Exponent> m;
  for (Prime p : keys) m[p] = f(a.at(p), b.at(p));
  return Supernatural(std::move(m), dflt);
}
}  // namespace

Supernatural sn_mul(const Supernatural& a, const Supernatural& b) {
  return pointwise(a, b, a.default_inf() || b.default_inf(), ex_add);
}

Supernatural sn_gcd(const Supernatural& a, const Supernatural& b) {
  return pointwise(a, b, a.default_inf() && b.default_inf(), [](Exponent x, Exponent y) { return std::min(x, y); });
}

Supernatural sn_lcm(const Supernatural& a, const Supernatural& b) {
  return pointwise(a, b, a.default_inf() || b.default_inf(), [](Exponent x, Exponent y) { return std::max(x, y); });
}

bool sn_divides(const Supernatural& a, const Supernatural& b) {
  if (a.default_inf() && !b.default_inf()) return false;
  for (auto& kv : a.exceptions())
    if (kv.second > b.at(kv.first)) return false;
  for (auto& kv : b.exceptions())
    if (a.at(kv.first) > kv.second) return false;
  return true;
}

bool sn_equivalent(const Supernatural& a, const Supernatural& b) {
  if (a.default_inf() != b.default_inf()) return false;
  auto ok = [&](Prime p) {
    Exponent x = a.at(p), y = b.at(p);
    return x == y || (x != kInf && y != kInf);
  };
  for (auto& kv : a.exceptions())
    if (!ok(kv.first)) return false;
  for (auto& kv : b.exceptions())
    if (!ok(kv.first)) return false;
  return true;
}

Supernatural TypeClass::canonical() const {
  std::map<Prime, Exponent> m;
  for (auto& [p, e] : rep_.exceptions()) m[p] = e == kInf ? kInf : 0;
  return Supernatural(std::move(m), rep_.default_inf());
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  bool word(std::string_view w) {
    skip();
    if (s.substr(i, w.size()) != w) return false;
    std::size_t j = i + w.size();
    if (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) return false;
    i = j;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("supernatural '" + std::string(s) + "' at offset " + std::to_string(i) + ": " + what);
  }
  unsigned long long number() {
    skip();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected a number");
    if (j - i > 18) fail("number too large");
    unsigned long long v = std::stoull(std::string(s.substr(i, j - i)));
    i = j;
    return v;
  }
  Exponent exponent() {
    skip();
    if (word("inf")) return kInf;
    if (i < s.size() && s[i] == '-') fail("negative exponent");
    return Exponent(number());
  }
};

}  // namespace

Supernatural parse_supernatural(std::string_view text) {
  Cursor c{text};
  std::map<Prime, Exponent> m;
  bool dflt = false;
  if (c.done()) c.fail("empty");
  if (!c.word("default")) {
    for (;;) {
      Prime p = c.number();
      Exponent e = 1;
      c.skip();
      if (c.i < text.size() && text[c.i] == '^') {
        if (p == 1) c.fail("1 takes no exponent");
        ++c.i;
        e = c.exponent();
      }
      if (p != 1) {
        if (!is_prime(p)) c.fail(std::to_string(p) + " is not prime");
        if (m.count(p)) c.fail("repeated prime " + std::to_string(p));
        m[p] = e;
      }
      c.skip();
      if (c.i < text.size() && text[c.i] == '*') {
        ++c.i;
        continue;
      }
      break;
    }
    if (c.done()) return Supernatural(std::move(m), false);
    if (!c.word("default")) c.fail("unexpected text");
  }
  if (c.word("inf"))
    dflt = true;
  else if (c.word("0"))
    dflt = false;
  else
    c.fail("default must be 0 or inf");
  if (!c.done()) c.fail("trailing text");
  return Supernatural(std::move(m), dflt);
}

}  // namespace protori
