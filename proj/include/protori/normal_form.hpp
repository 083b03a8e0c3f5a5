#pragma once
#include <utility>
#include <vector>

#include "protori/numeric.hpp"

namespace protori {

namespace detail {
template <class Z>
Z floor_quot(const Z& a, const Z& b) {
  Z q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}
}  // namespace detail

// Row Hermite form: upper echelon, positive pivots, entries above a pivot in [0, pivot).
// Zero rows are dropped, so the result has rank(A) rows.
template <class Z>
Mat<Z> hermite(Mat<Z> a) {
  using std::abs;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    bool found = false;
    for (;;) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = r; i < a.rows(); ++i)
        if (a(i, c) != 0 && (piv < 0 || abs(a(i, c)) < abs(a(piv, c)))) piv = i;
      if (piv < 0) break;
      found = true;
      if (piv != r) a.row(piv).swap(a.row(r));
      bool clean = true;
      for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        Z q = a(i, c) / a(r, c);
        a.row(i) -= q * a.row(r);
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (a(r, c) < 0) a.row(r) = -a.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      Z q = detail::floor_quot(a(i, c), a(r, c));
      if (q != 0) a.row(i) -= q * a.row(r);
    }
    ++r;
  }
  return a.topRows(r);
}

// P·A·Q = D with P, Q unimodular and D diagonal, d_0 | d_1 | ... .
// Pinv is kept alongside P so callers can read A = Pinv·D·Q^{-1}.
template <class Z>
struct Smith {
  Mat<Z> P, Pinv, Q;
  std::vector<Z> diag;  // min(rows, cols) entries, nonzero ones first
};

template <class Z>
Smith<Z> smith(const Mat<Z>& a) {
  using std::abs;
  const Eigen::Index m = a.rows(), n = a.cols();
  Mat<Z> d = a;
  Smith<Z> s;
  s.P = Mat<Z>::Identity(m, m);
  s.Pinv = Mat<Z>::Identity(m, m);
  s.Q = Mat<Z>::Identity(n, n);

  auto row_addmul = [&](Eigen::Index dst, Eigen::Index src, const Z& q) {  // row_dst += q row_src
    d.row(dst) += q * d.row(src);
    s.P.row(dst) += q * s.P.row(src);
    s.Pinv.col(src) -= q * s.Pinv.col(dst);
  };
  auto row_swap = [&](Eigen::Index i, Eigen::Index j) {
    d.row(i).swap(d.row(j));
    s.P.row(i).swap(s.P.row(j));
    s.Pinv.col(i).swap(s.Pinv.col(j));
  };
  auto col_addmul = [&](Eigen::Index dst, Eigen::Index src, const Z& q) {
    d.col(dst) += q * d.col(src);
    s.Q.col(dst) += q * s.Q.col(src);
  };

  const Eigen::Index k = std::min(m, n);
  for (Eigen::Index t = 0; t < k; ++t) {
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi < 0 || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      if (pi != t) row_swap(pi, t);
      if (pj != t) {
        d.col(pj).swap(d.col(t));
        s.Q.col(pj).swap(s.Q.col(t));
      }
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        row_addmul(i, t, Z(-(d(i, t) / d(t, t))));
        if (d(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        col_addmul(j, t, Z(-(d(t, j) / d(t, t))));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_addmul(t, bad, Z(1));
    }
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      s.P.row(t) = -s.P.row(t);
      s.Pinv.col(t) = -s.Pinv.col(t);
    }
  }
  s.diag.reserve(std::size_t(k));
  for (Eigen::Index t = 0; t < k; ++t) s.diag.push_back(d(t, t));
  return s;
}

}  // namespace protori
