#include "protori/local.hpp"

#include <algorithm>

#include "protori/errors.hpp"
#include "protori/normal_form.hpp"

namespace protori {

bool LocalStructure::contains(const QVec& x) const {
  if (p == 0) throw InputError("containment needs a concrete prime");
  if (in_divisible(x)) return true;
  QVec y = x * M;
  for (Eigen::Index i = 0; i < y.size(); ++i)
    if (!p_integral(y(i), p)) return false;
  return true;
}

bool LocalStructure::in_divisible(const QVec& x) const { return QVec(x * M).isZero(); }

Exponent LocalStructure::height(const QVec& x, Prime q) const {
  QVec y = x * M;
  Exponent h = kInf;
  for (Eigen::Index i = 0; i < y.size(); ++i) h = std::min(h, valuation(y(i), q));
  return h;
}

std::vector<Exponent> LocalStructure::exponents() const {
  std::vector<Exponent> e(std::size_t(d), kInf);
  for (auto& dk : diag) e.push_back(p ? valuation(dk, p) - a : 0);
  std::sort(e.begin(), e.end(), std::greater<>());
  return e;
}

LocalStructure local_structure(const GroupDescription& x, Prime p) {
  LocalStructure ls;
  ls.p = p;
  ls.n = x.rank();
  const int n = ls.n;
  std::vector<QVec> inf_rows;
  for (auto& dir : x.directives()) {
    Exponent e = p ? dir.s.at(p) : dir.s.default_exponent();
    if (e == kInf) inf_rows.push_back(dir.v);
  }
  ls.divisible = row_basis(stack(inf_rows, n));
  ls.d = int(ls.divisible.rows());
  QMat proj = ls.d ? right_kernel(ls.divisible, n) : QMat(QMat::Identity(n, n));

  // Λ = Z^n·P + Σ Z·p^{-e}v·P over the finite directives
  std::vector<QVec> gens;
  for (int i = 0; i < n; ++i) gens.push_back(proj.row(i));
  if (p) {
    for (auto& dir : x.directives()) {
      Exponent e = dir.s.at(p);
      if (e == kInf) continue;
      gens.push_back(QVec(dir.v * proj) / Rational(ipow(p, e)));
    }
  }
  const int k = n - ls.d;
  QMat lam = hnf_basis(stack(gens, k)).basis_inverse();
  ls.M = proj * lam;
  if (!p) return ls;

  Integer dn = denominator_lcm(ls.M);
  ls.a = valuation(dn, p);
  Smith<Integer> s = smith(to_integer(QMat(ls.M * Rational(dn))));
  ls.P = std::move(s.P);
  ls.Pinv = std::move(s.Pinv);
  ls.diag = std::move(s.diag);
  return ls;
}

std::vector<Prime> special_primes(const GroupDescription& x) {
  std::vector<Prime> ps;
  for (auto& dir : x.directives()) {
    for (auto& kv : dir.s.exceptions()) ps.push_back(kv.first);
    collect_primes(denominator_lcm(dir.v), ps);
  }
  sort_unique(ps);
  return ps;
}

GroupDescription in_basis(const GroupDescription& x, const Lattice& f) {
  if (f.is_standard()) return x;
  const QMat& inv = f.basis_inverse();
  std::vector<Directive> dirs;
  for (auto& dir : x.directives()) dirs.push_back({QVec(dir.v * inv), dir.s});
  for (Eigen::Index i = 0; i < inv.rows(); ++i) {
    QVec r = inv.row(i);
    if (!is_integral(r)) dirs.push_back({r, Supernatural::one()});
  }
  return GroupDescription(x.rank(), std::move(dirs));
}

Integer Truncation::order() const {
  Integer o = 1;
  for (int bk : b) o *= ipow(p, bk);
  return o;
}

namespace {
Integer residue(const Rational& q, const Integer& mod) {
  Integer dn = den(q);
  return floor_mod(num(q) * mod_inverse(dn, mod), mod);
}
}  // namespace

std::vector<Integer> Truncation::coords(const QVec& x) const {
  const int n = local.n;
  const Integer pn = ipow(p, N);
  QVec y = (x * F.basis_inverse()) * Rational(pn);
  ZVec u(n);
  for (int i = 0; i < n; ++i) {
    if (!p_integral(y(i), p)) throw InputError("element is not p^N-torsion modulo F");
    u(i) = residue(y(i), pn);
  }
  ZVec w = u * local.Pinv;
  std::vector<Integer> c;
  for (std::size_t k = 0; k < index.size(); ++k) {
    Integer wk = floor_mod(w(index[k]), pn);
    Integer pt = ipow(p, t[k]);
    if (wk % pt != 0) throw InputError("element lies outside the truncated subgroup");
    c.push_back(floor_mod(wk / pt, modulus(k)));
  }
  return c;
}

QVec Truncation::element(const std::vector<Integer>& c) const {
  QVec x = zero_vec(local.n);
  for (std::size_t k = 0; k < gens.size(); ++k) x += gens[k] * Rational(c[k]);
  return x;
}

Truncation truncation(const GroupDescription& x, const Lattice& f, Prime p, int N) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (N < 1) throw InputError("truncation depth must be positive");
  Truncation tr;
  tr.p = p;
  tr.N = N;
  tr.F = f;
  tr.local = local_structure(in_basis(x, f), p);
  const LocalStructure& ls = tr.local;
  const int n = ls.n;
  for (int k = 0; k < n; ++k) {
    Exponent tk = 0;
    if (k < int(ls.diag.size())) tk = std::max<Exponent>(0, N + ls.a - valuation(ls.diag[std::size_t(k)], p));
    int bk = int(N - std::min<Exponent>(tk, N));
    if (bk == 0) continue;
    tr.index.push_back(k);
    tr.t.push_back(int(tk));
    tr.b.push_back(bk);
    QVec g = to_rational(ZMat(ls.P.row(k))) * (Rational(ipow(p, tk)) / Rational(ipow(p, N)));
    tr.gens.push_back(g * f.basis());
  }
  return tr;
}

}  // namespace protori
