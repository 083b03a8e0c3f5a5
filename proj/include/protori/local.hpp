#pragma once
#include <vector>

#include "protori/group.hpp"
#include "protori/lattice.hpp"

namespace protori {

// p-local picture of X: X_(p) = D_p + {x : x·M p-integral}, D_p the span of
// the directives that are p-divisible to all orders.
struct LocalStructure {
  Prime p = 0;  // 0 stands for every prime outside special_primes(X)
  int n = 0, d = 0;
  QMat divisible;  // d x n
  QMat M;          // n x (n-d), left kernel exactly D_p

  // only for p != 0: p^a·w·M = Pinv·diag·Q^{-1} with w prime to p
  Exponent a = 0;
  ZMat P, Pinv;
  std::vector<Integer> diag;

  bool contains(const QVec& x) const;
  bool in_divisible(const QVec& x) const;
  // min over q-valuations of x·M; kInf on D_p. q = p unless p is generic.
  Exponent height(const QVec& x, Prime q) const;
  // elementary exponents of (X/Z^n)_p, descending, ∞ first
  std::vector<Exponent> exponents() const;
};

LocalStructure local_structure(const GroupDescription& x, Prime p);

// Primes where X_(p) can differ from the generic picture.
std::vector<Prime> special_primes(const GroupDescription& x);

// The same group in coordinates where F becomes Z^n (F ⊆ X assumed).
GroupDescription in_basis(const GroupDescription& x, const Lattice& f);

// (X/F)[p^N] = (X ∩ p^{-N}F)/F as a sum of cyclic groups Z/p^{b_k}.
struct Truncation {
  Prime p = 0;
  int N = 0;
  Lattice F = Lattice::standard(0);
  LocalStructure local;       // of in_basis(X, F)
  std::vector<int> index;     // SNF coordinate of each kept factor
  std::vector<int> t;         // u'_k must be divisible by p^{t_k}
  std::vector<int> b;         // factor orders p^{b_k}, all > 0
  std::vector<QVec> gens;     // original coordinates

  Integer modulus(std::size_t k) const { return ipow(p, b[k]); }
  Integer order() const;
  // coefficients of x ∈ X ∩ p^{-N}F against gens
  std::vector<Integer> coords(const QVec& x) const;
  QVec element(const std::vector<Integer>& c) const;
};

Truncation truncation(const GroupDescription& x, const Lattice& f, Prime p, int N);

}  // namespace protori
