#pragma once
#include <string>
#include <utility>
#include <vector>

#include "protori/supernatural.hpp"

namespace protori {

inline constexpr int kDepthBound = 12;

// Ẑ(n⃗) = Π_j Π_p Ẑ(p^{n_j(p)}); canonical when produced by std_rep.
struct StdRep {
  std::vector<Supernatural> rows;

  int width() const { return int(rows.size()); }
  std::string str() const;  // m, then one row per line
  bool operator==(const StdRep&) const = default;
};

// direct sum of cyclic groups Z/p^k
class FiniteAbelian {
 public:
  FiniteAbelian() = default;
  explicit FiniteAbelian(std::vector<std::pair<Prime, int>> factors);
  const std::vector<std::pair<Prime, int>>& factors() const { return f_; }
  Integer order() const;
  bool trivial() const { return f_.empty(); }
  std::string str() const;  // "0" or "2^3 2^1 3^1"
  bool operator==(const FiniteAbelian&) const = default;

 private:
  std::vector<std::pair<Prime, int>> f_;  // prime ascending, exponent descending
};

StdRep std_rep(std::vector<Supernatural> raw);
int width_nA(const StdRep& s);
int dim_nA(const StdRep& s);
bool infinite_row(const Supernatural& row);
bool profinite_isogenous(const StdRep& a, const StdRep& b);
FiniteAbelian truncate(const StdRep& s, Prime p, int N, int bound = kDepthBound);
FiniteAbelian mu_kernel(const StdRep& s, const Integer& n);
// K in 0 → K → Ẑ^m → Ẑ(n⃗) → 0
StdRep projective_kernel(const StdRep& s);
// N·Δ: every finite exponent drops by v_p(N)
StdRep scale(const StdRep& s, const Integer& n);
// primes named explicitly in some row
std::vector<Prime> support(const StdRep& s);
StdRep parse_std_rep(const std::string& text);

}  // namespace protori
