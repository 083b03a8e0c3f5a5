#include "protori/lattice.hpp"

#include "protori/normal_form.hpp"

namespace protori {

Lattice Lattice::standard(int n) { return from_hnf(QMat::Identity(n, n)); }

Lattice Lattice::from_hnf(QMat basis) {
  Lattice l;
  l.inv_ = inverse(basis);
  l.basis_ = std::move(basis);
  return l;
}

Rational Lattice::det() const {
  Rational d = 1;
  for (Eigen::Index i = 0; i < basis_.rows(); ++i) d *= basis_(i, i);
  return d;
}

bool Lattice::contains(const QVec& x) const {
  if (x.size() != basis_.cols()) throw InputError("dimension mismatch");
  return is_integral(QVec(x * inv_));
}

bool Lattice::contains(const Lattice& o) const {
  for (Eigen::Index i = 0; i < o.basis_.rows(); ++i)
    if (!contains(QVec(o.basis_.row(i)))) return false;
  return true;
}

bool Lattice::is_standard() const { return basis_ == QMat::Identity(basis_.rows(), basis_.cols()); }

Lattice hnf_basis(const QMat& gens) {
  const Eigen::Index n = gens.cols();
  Integer d = denominator_lcm(gens);
  ZMat z = to_integer(QMat(gens * Rational(d)));
  ZMat h = hermite(z);
  if (h.rows() != n) throw InputError("generators do not span Q^" + std::to_string(n));
  return Lattice::from_hnf(QMat(to_rational(h) / Rational(d)));
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.rank() != b.rank()) throw InputError("lattice rank mismatch");
  return hnf_basis(stack(a.basis(), b.basis()));
}

Lattice dual(const Lattice& l) { return hnf_basis(QMat(l.basis_inverse().transpose())); }

Lattice lattice_meet(const Lattice& a, const Lattice& b) {
  if (a.rank() != b.rank()) throw InputError("lattice rank mismatch");
  return dual(lattice_sum(dual(a), dual(b)));
}

Lattice scaled(const Lattice& l, const Rational& c) {
  if (c == 0) throw InputError("scaling by zero");
  return hnf_basis(QMat(l.basis() * c));
}

Integer lattice_index(const Lattice& big, const Lattice& small) {
  if (big.rank() != small.rank()) throw InputError("lattice rank mismatch");
  for (Eigen::Index i = 0; i < small.basis().rows(); ++i) {
    QVec row = small.basis().row(i);
    if (!big.contains(row)) throw ContainmentError("lattices are not nested; outside vector", row);
  }
  Rational q = small.det() / big.det();
  return num(q);
}

Integer scaling_witness(const Lattice& l1, const Lattice& l2) {
  if (l1.rank() != l2.rank()) throw InputError("lattice rank mismatch");
  return denominator_lcm(QMat(l1.basis() * l2.basis_inverse()));
}

bool mixed_position(const Lattice& l) {
  auto z = Lattice::standard(l.rank());
  return !z.contains(l) && !l.contains(z);
}

HemispherePoint hemisphere_rep(const QVec& z) {
  if (z.isZero()) throw InputError("hemisphere_rep of the zero vector");
  const Eigen::Index n = z.size();
  Integer l = denominator_lcm(z);
  ZVec w(n);
  Integer g = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    w(i) = num(z(i) * Rational(l));
    g = gcd(g, w(i));
  }
  HemispherePoint h;
  h.radius = l == 1 ? g : Integer(1);
  for (Eigen::Index i = 0; i < n; ++i) w(i) /= g;
  for (Eigen::Index i = 0; i < n; ++i)
    if (w(i) != 0) {
      if (w(i) < 0) w = -w;
      break;
    }
  h.coords = w;
  return h;
}

}  // namespace protori
