#include "protori/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "protori/errors.hpp"

namespace protori {

std::string ex_str(Exponent e) { return e == kInf ? "inf" : std::to_string(e); }

bool is_prime(Prime p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (Prime d = 3; d <= p / d; d += 2)
    if (p % d == 0) return false;
  return true;
}

Prime next_prime(Prime p) {
  Prime q = p + 1;
  while (!is_prime(q)) ++q;
  return q;
}

namespace {
thread_local Prime g_bound = Prime(1) << 20;
}

Prime prime_bound() { return g_bound; }
PrimeBoundScope::PrimeBoundScope(Prime bound) : saved_(g_bound) {
  if (bound < 2) throw InputError("prime bound must be at least 2");
  g_bound = bound;
}
PrimeBoundScope::~PrimeBoundScope() { g_bound = saved_; }

std::vector<Prime> prime_factors(const Integer& n0) {
  if (n0 == 0) throw InputError("prime_factors of zero");
  Integer n = abs(n0);
  std::vector<Prime> out;
  const Prime bound = g_bound;
  for (Prime d = 2; d <= bound; d += (d == 2 ? 1 : 2)) {
    if (Integer(d) * d > n) break;
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) {
    // whatever survives is prime provided the division reached its square root
    if (n > Integer(bound) * bound) throw BoundError("cofactor " + to_string(n) + " exceeds trial-division bound");
    if (n > Integer(std::numeric_limits<Prime>::max())) throw BoundError("prime too large");
    out.push_back(n.convert_to<Prime>());
  }
  return out;
}

Exponent valuation(const Integer& n0, Prime p) {
  if (n0 == 0) return kInf;
  Integer n = n0;
  Exponent v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Exponent valuation(const Rational& q, Prime p) {
  if (q == 0) return kInf;
  return valuation(num(q), p) - valuation(den(q), p);
}

Integer ipow(Prime p, Exponent e) {
  Integer r = 1;
  for (Exponent i = 0; i < e; ++i) r *= p;
  return r;
}

Integer num(const Rational& q) { return numerator(q); }
Integer den(const Rational& q) { return denominator(q); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r0 = floor_mod(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw InputError("not invertible");
  return floor_mod(s0, m);
}

bool p_integral(const Rational& q, Prime p) { return den(q) % p != 0; }

bool is_integral(const QVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (den(v(i)) != 1) return false;
  return true;
}

Integer denominator_lcm(const QMat& m) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) l = lcm(l, den(m(i, j)));
  return l;
}

Integer denominator_lcm(const QVec& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, den(v(i)));
  return l;
}

void collect_primes(const Integer& n, std::vector<Prime>& out) {
  if (n == 0 || abs(n) == 1) return;
  auto ps = prime_factors(n);
  out.insert(out.end(), ps.begin(), ps.end());
}

void sort_unique(std::vector<Prime>& ps) {
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
}

QMat to_rational(const ZMat& m) {
  QMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

ZMat to_integer(const QMat& m) {
  ZMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (den(m(i, j)) != 1) throw InputError("expected an integral matrix");
      r(i, j) = num(m(i, j));
    }
  return r;
}

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(r));
    Rational inv = 1 / m(r, c);
    m.row(r) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      m.row(i) -= f * m.row(r);
    }
    pivots.push_back(int(c));
    ++r;
  }
  return pivots;
}

int rank(const QMat& m) {
  QMat t = m;
  return int(rref(t).size());
}

QMat inverse(const QMat& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw InputError("inverse of a non-square matrix");
  QMat aug(n, 2 * n);
  aug << m, QMat::Identity(n, n);
  auto piv = rref(aug);
  if (Eigen::Index(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1)) throw InputError("singular matrix");
  return aug.rightCols(n);
}

Rational determinant(const QMat& m0) {
  QMat m = m0;
  const Eigen::Index n = m.rows();
  Rational det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      m.row(piv).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      m.row(i) -= f * m.row(c);
    }
  }
  return det;
}

QMat right_kernel(const QMat& m, int cols) {
  if (m.rows() == 0) return QMat::Identity(cols, cols);
  QMat r = m;
  auto piv = rref(r);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<QVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    QVec v = zero_vec(cols);
    v(f) = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v(piv[k]) = -r(Eigen::Index(k), f);
    Integer l = denominator_lcm(v);
    Integer g = 0;
    for (int j = 0; j < cols; ++j) {
      v(j) *= Rational(l);
      g = gcd(g, num(v(j)));
    }
    for (int j = 0; j < cols; ++j) v(j) /= Rational(g);
    basis.push_back(v);
  }
  QMat k(cols, Eigen::Index(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) k.col(Eigen::Index(j)) = basis[j].transpose();
  return k;
}

QMat row_basis(const QMat& m) {
  QMat r = m;
  auto piv = rref(r);
  return r.topRows(Eigen::Index(piv.size()));
}

bool in_row_span(const QMat& rows, const QVec& x) {
  if (rows.rows() == 0) return x.isZero();
  QMat both(rows.rows() + 1, rows.cols());
  both << rows, x;
  return rank(both) == rank(rows);
}

QVec zero_vec(int n) { return QVec::Zero(n); }

QVec unit_vec(int n, int j) {
  QVec v = QVec::Zero(n);
  v(j) = 1;
  return v;
}

QMat stack(const QMat& top, const QMat& bottom) {
  QMat r(top.rows() + bottom.rows(), std::max(top.cols(), bottom.cols()));
  if (top.rows()) r.topRows(top.rows()) = top;
  if (bottom.rows()) r.bottomRows(bottom.rows()) = bottom;
  return r;
}

QMat stack(const std::vector<QVec>& rows, int cols) {
  QMat r(Eigen::Index(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) r.row(Eigen::Index(i)) = rows[i];
  return r;
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

std::string to_string(const QVec& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v(i));
  }
  return s + ")";
}

std::string to_string(const ZVec& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v(i).str();
  }
  return s + ")";
}

std::string to_string(const QMat& m) {
  std::string s;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) s += ";";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += to_string(m(i, j));
    }
  }
  return s;
}

namespace {
bool all_digits(const std::string& s, std::size_t from) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}
}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string s = trim(raw);
  auto slash = s.find('/');
  std::string a = s.substr(0, slash);
  std::string b = slash == std::string::npos ? "1" : s.substr(slash + 1);
  std::size_t sign = (!a.empty() && (a[0] == '-' || a[0] == '+')) ? 1 : 0;
  if (!all_digits(a, sign) || !all_digits(b, 0)) throw InputError("bad rational '" + s + "'");
  Integer n(a[0] == '+' ? a.substr(1) : a), d(b);
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  return Rational(n, d);
}

QMat parse_matrix(const std::string& s) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream rs(s);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Rational> r;
    std::stringstream es(row);
    std::string e;
    while (std::getline(es, e, ',')) r.push_back(parse_rational(e));
    if (r.empty()) throw InputError("empty matrix row");
    if (!rows.empty() && r.size() != rows[0].size()) throw InputError("ragged matrix");
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw InputError("empty matrix");
  QMat m(Eigen::Index(rows.size()), Eigen::Index(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(Eigen::Index(i), Eigen::Index(j)) = rows[i][j];
  return m;
}

}  // namespace protori
