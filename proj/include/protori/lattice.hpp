#pragma once
#include "protori/errors.hpp"
#include "protori/numeric.hpp"

namespace protori {

struct ContainmentError : InputError {
  QVec witness;  // a vector of the would-be sublattice outside the other
  ContainmentError(const std::string& what, QVec w) : InputError(what + " " + to_string(w)), witness(std::move(w)) {}
};

// Full-rank subgroup of Q^n, stored as its rational row Hermite basis.
class Lattice {
 public:
  static Lattice standard(int n);
  static Lattice from_hnf(QMat basis);  // trusted; basis already canonical

  int rank() const { return int(basis_.rows()); }
  const QMat& basis() const { return basis_; }
  const QMat& basis_inverse() const { return inv_; }
  Rational det() const;  // positive
  bool contains(const QVec& x) const;
  bool contains(const Lattice& other) const;
  bool is_standard() const;
  bool operator==(const Lattice& o) const { return basis_ == o.basis_; }

 private:
  QMat basis_, inv_;
};

Lattice hnf_basis(const QMat& generators);  // rows; must span Q^n
Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_meet(const Lattice& a, const Lattice& b);
Lattice dual(const Lattice& l);
Lattice scaled(const Lattice& l, const Rational& c);
Integer lattice_index(const Lattice& big, const Lattice& small);
Integer scaling_witness(const Lattice& l1, const Lattice& l2);  // least k with k·l1 ⊆ l2

// neither inside Z^n nor containing it
bool mixed_position(const Lattice& l);

struct HemispherePoint {
  ZVec coords;     // primitive, first nonzero coordinate positive
  Integer radius;  // gcd of z when z is integral, else 1
};
HemispherePoint hemisphere_rep(const QVec& z);

}  // namespace protori
