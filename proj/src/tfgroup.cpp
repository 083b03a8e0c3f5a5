#include "protori/tfgroup.hpp"

#include <algorithm>

#include "protori/errors.hpp"

namespace protori {

namespace {

void check_dim(const GroupDescription& x, const QVec& q) {
  if (q.size() != x.rank()) throw InputError("vector " + to_string(q) + " does not have dimension " + std::to_string(x.rank()));
}

void entry_primes(const QVec& v, std::vector<Prime>& ps, bool numerators) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    collect_primes(den(v(i)), ps);
    if (numerators) collect_primes(num(v(i)), ps);
  }
}

QVec apply(const QMat& a, const QVec& v) { return QVec(v * a.transpose()); }

}  // namespace

bool member(const GroupDescription& x, const QVec& q) {
  check_dim(x, q);
  for (Prime p : prime_factors(denominator_lcm(q)))
    if (!local_structure(x, p).contains(q)) return false;
  return true;
}

Exponent p_height(const GroupDescription& x, Prime p, const QVec& z) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  check_dim(x, z);
  if (z.isZero()) throw InputError("height of the zero vector");
  if (!member(x, z)) throw InputError(to_string(z) + " is not in the group");
  return local_structure(x, p).height(z, p);
}

Supernatural height_seq(const GroupDescription& x, const QVec& z) {
  check_dim(x, z);
  if (z.isZero()) throw InputError("height of the zero vector");
  if (!member(x, z)) throw InputError(to_string(z) + " is not in the group");
  auto special = special_primes(x);
  std::map<Prime, Exponent> exc;
  for (Prime p : special) exc[p] = local_structure(x, p).height(z, p);
  LocalStructure gen = local_structure(x, 0);
  QVec w = z * gen.M;
  const bool divisible = w.isZero();
  if (!divisible) {
    std::vector<Prime> ps;
    entry_primes(w, ps, true);
    sort_unique(ps);
    for (Prime p : ps)
      if (!std::binary_search(special.begin(), special.end(), p)) exc[p] = gen.height(z, p);
  }
  return Supernatural(std::move(exc), divisible);
}

TypeClass rank1_type(const GroupDescription& x) {
  if (x.rank() != 1) throw InputError("rank1_type needs a rank-1 group");
  return TypeClass(height_seq(x, unit_vec(1, 0)));
}

bool rank1_isomorphic(const GroupDescription& x, const GroupDescription& y) {
  return rank1_type(x) == rank1_type(y);
}

Supernatural sup_heights(const GroupDescription& x) {
  std::map<Prime, Exponent> exc;
  for (Prime p : special_primes(x)) {
    auto ls = local_structure(x, p);
    auto e = ls.exponents();
    exc[p] = e.empty() ? 0 : e.front();
  }
  return Supernatural(std::move(exc), local_structure(x, 0).d > 0);
}

TypeClass tau_sup(const GroupDescription& x) { return TypeClass(sup_heights(x)); }

StdRep quotient_structure(const GroupDescription& x, const Lattice& f) {
  const int n = x.rank();
  if (f.rank() != n) throw InputError("lattice rank does not match group rank");
  for (int i = 0; i < n; ++i) {
    QVec row = f.basis().row(i);
    if (!member(x, row)) throw ContainmentError("lattice is not inside the group; outside vector", row);
  }
  GroupDescription y = in_basis(x, f);
  const int dgen = local_structure(y, 0).d;
  std::vector<std::map<Prime, Exponent>> exc(static_cast<std::size_t>(n));
  for (Prime p : special_primes(y)) {
    auto e = local_structure(y, p).exponents();
    for (int j = 0; j < n; ++j) exc[std::size_t(j)][p] = e[std::size_t(j)];
  }
  std::vector<Supernatural> raw;
  for (int j = 0; j < n; ++j) raw.emplace_back(std::move(exc[std::size_t(j)]), j < dgen);
  return std_rep(std::move(raw));
}

bool hom_check_at(const QMat& a, const GroupDescription& x, const GroupDescription& y, Prime p) {
  LocalStructure ly = local_structure(y, p);
  for (auto& dir : x.directives()) {
    QVec w = apply(a, dir.v);
    Exponent e = p ? dir.s.at(p) : dir.s.default_exponent();
    if (e == kInf) {
      if (!ly.in_divisible(w)) return false;
    } else if (p) {
      if (!ly.contains(QVec(w / Rational(ipow(p, e))))) return false;
    }
  }
  if (p)
    for (int j = 0; j < x.rank(); ++j)
      if (!ly.contains(QVec(a.col(j).transpose()))) return false;
  return true;
}

std::optional<QVec> hom_counterexample(const QMat& a, const GroupDescription& x, const GroupDescription& y) {
  if (a.rows() != y.rank() || a.cols() != x.rank()) throw InputError("matrix shape does not match the groups");
  const int n = x.rank();
  for (int j = 0; j < n; ++j)
    if (!member(y, QVec(a.col(j).transpose()))) return unit_vec(n, j);

  std::vector<Prime> ps = special_primes(x);
  auto sy = special_primes(y);
  ps.insert(ps.end(), sy.begin(), sy.end());
  collect_primes(denominator_lcm(a), ps);
  for (auto& dir : x.directives()) entry_primes(apply(a, dir.v), ps, false);
  sort_unique(ps);

  // walk down v/p^j until A·v/p^j leaves Y_(p); terminates because A·v ∉ D_p(Y)
  auto descend = [&](const QVec& v, const LocalStructure& ly) {
    QVec w = apply(a, v);
    Integer pj = 1;
    while (ly.contains(QVec(w / Rational(pj)))) pj *= Integer(ly.p);
    return QVec(v / Rational(pj));
  };

  for (Prime p : ps) {
    LocalStructure ly = local_structure(y, p);
    for (auto& dir : x.directives()) {
      QVec w = apply(a, dir.v);
      Exponent e = dir.s.at(p);
      if (e == kInf) {
        if (!ly.in_divisible(w)) return descend(dir.v, ly);
      } else {
        Rational pe(ipow(p, e));
        if (!ly.contains(QVec(w / pe))) return QVec(dir.v / pe);
      }
    }
  }
  LocalStructure gy = local_structure(y, 0);
  for (auto& dir : x.directives()) {
    if (!dir.s.default_inf()) continue;
    if (gy.in_divisible(apply(a, dir.v))) continue;
    Prime q = 2;
    while (std::binary_search(ps.begin(), ps.end(), q)) q = next_prime(q);
    return descend(dir.v, local_structure(y, q));
  }
  return std::nullopt;
}

bool hom_check(const QMat& a, const GroupDescription& x, const GroupDescription& y) {
  return !hom_counterexample(a, x, y).has_value();
}

std::optional<Integer> scaling_into(const GroupDescription& x, const GroupDescription& y) {
  if (x.rank() != y.rank()) throw InputError("rank mismatch");
  const int n = x.rank();
  const QMat id = QMat::Identity(n, n);
  if (!hom_check_at(id, x, y, 0)) return std::nullopt;
  std::vector<Prime> ps = special_primes(x);
  auto sy = special_primes(y);
  ps.insert(ps.end(), sy.begin(), sy.end());
  sort_unique(ps);
  Integer k = 1;
  for (Prime p : ps) {
    // X_(p) ⊆ D_p(X) + p^{-bound} Z_(p)^n, and Y_(p) ⊇ Z_(p)^n
    Exponent bound = 0;
    for (auto& dir : x.directives()) {
      Exponent e = dir.s.at(p);
      Exponent dv = valuation(denominator_lcm(dir.v), p);
      if (e != kInf) bound = std::max(bound, e + dv);
      else bound = std::max(bound, dv);
    }
    Exponent j = 0;
    while (j <= bound && !hom_check_at(QMat(id * Rational(ipow(p, j))), x, y, p)) ++j;
    if (j > bound) return std::nullopt;
    k *= ipow(p, j);
  }
  return k;
}

Split canonical_split(const GroupDescription& x) {
  const int n = x.rank();
  Split out;
  // lines of height ∞ at every prime: Q-summands
  std::vector<QMat> blocks{local_structure(x, 0).M};
  for (Prime p : special_primes(x)) blocks.push_back(local_structure(x, p).M);
  Eigen::Index cols = 0;
  for (auto& b : blocks) cols += b.cols();
  QMat all(n, cols);
  Eigen::Index at = 0;
  for (auto& b : blocks) {
    if (b.cols()) all.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  QMat dall = right_kernel(QMat(all.transpose()), n).transpose();
  out.k = int(dall.rows());

  GroupDescription y = x;
  if (out.k > 0) {
    QMat q = right_kernel(dall, n);
    const int m = n - out.k;
    std::vector<Directive> dirs;
    if (m > 0) {
      Lattice img = hnf_basis(q);
      QMat phi = q * img.basis_inverse();
      for (auto& dir : x.directives()) {
        QVec v = dir.v * phi;
        if (!v.isZero()) dirs.push_back({v, dir.s});
      }
    }
    y = GroupDescription(m, std::move(dirs));
  }

  // axes no active directive touches split off as free summands
  const int m = y.rank();
  std::vector<int> keep;
  for (int j = 0; j < m; ++j) {
    bool touched = false;
    for (auto& dir : y.directives())
      if (y.active(dir) && dir.v(j) != 0) touched = true;
    if (touched) keep.push_back(j);
    else ++out.r;
  }
  std::vector<Directive> dirs;
  for (auto& dir : y.directives()) {
    if (!y.active(dir)) continue;
    QVec v(Eigen::Index(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) v(Eigen::Index(i)) = dir.v(keep[i]);
    dirs.push_back({v, dir.s});
  }
  out.reduced = GroupDescription(int(keep.size()), std::move(dirs));
  return out;
}

}  // namespace protori
