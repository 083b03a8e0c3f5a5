#include "protori/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "protori/errors.hpp"
#include "protori/lattice.hpp"

namespace protori::oracle {

TruncationContext context(Prime p, int N, int rank) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (N < 1) throw InputError("depth must be positive");
  Integer mod = ipow(p, N);
  Integer total = 1;
  for (int i = 0; i < rank; ++i) total *= mod;
  if (total > Integer(kCeiling)) throw BoundError("truncation (" + std::to_string(p) + "^" + std::to_string(N) + ")^" + std::to_string(rank) + " exceeds the oracle ceiling");
  return {p, N, mod, rank};
}

namespace {

// Bareiss elimination on an integer matrix; returns rank, pivot rows and columns
struct Bareiss {
  int rank = 0;
  std::vector<int> rows, cols;
  Integer det;  // of the square input, 0 if singular
};

Bareiss bareiss(ZMat a) {
  Bareiss out;
  const Eigen::Index m = a.rows(), n = a.cols();
  std::vector<int> order(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) order[std::size_t(i)] = int(i);
  Integer prev = 1;
  int sign = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < m; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      a.row(piv).swap(a.row(r));
      std::swap(order[std::size_t(piv)], order[std::size_t(r)]);
      sign = -sign;
    }
    for (Eigen::Index i = r + 1; i < m; ++i) {
      for (Eigen::Index j = c + 1; j < n; ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    out.rows.push_back(order[std::size_t(r)]);
    out.cols.push_back(int(c));
    ++r;
  }
  out.rank = int(r);
  out.det = (m == n && r == m) ? Integer(sign * prev) : Integer(0);
  if (m == n && r == m && m == 0) out.det = 1;
  return out;
}

ZMat scaled_integer(const QMat& m, Integer& scale) {
  scale = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) scale = lcm(scale, Integer(denominator(m(i, j))));
  ZMat z(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Rational v = m(i, j) * Rational(scale);
      z(i, j) = numerator(v);
    }
  return z;
}

Integer pmod(const Rational& q, const Integer& mod) {
  Integer d = denominator(q);
  Integer r0 = d % mod, r1 = mod, s0 = 1, s1 = 0;
  while (r1 != 0) {
    Integer t = r0 / r1, u = r0 - t * r1;
    r0 = r1;
    r1 = u;
    u = s0 - t * s1;
    s0 = s1;
    s1 = u;
  }
  Integer v = (Integer(numerator(q)) * s0) % mod;
  return v < 0 ? v + mod : v;
}

int vden(const Rational& q, Prime p) {
  Integer d = denominator(q);
  int v = 0;
  while (d % p == 0) {
    d /= p;
    ++v;
  }
  return v;
}

int vnum(const Integer& n0, Prime p) {
  Integer n = n0;
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Integer power(Prime p, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// Is b in the Z/p^T-span of the columns of a?
bool solvable_mod(std::vector<std::vector<Integer>> a, std::vector<Integer> b, Prime p, int T) {
  const Integer mod = power(p, T);
  const std::size_t n = b.size(), k = a.empty() ? 0 : a[0].size();
  auto val = [&](const Integer& x) { return x == 0 ? T : std::min(T, vnum(x, p)); };
  std::vector<std::size_t> colmap(k);
  for (std::size_t j = 0; j < k; ++j) colmap[j] = j;
  std::size_t r = 0;
  for (; r < n && r < k; ++r) {
    std::size_t bi = n, bj = k;
    int best = T;
    for (std::size_t i = r; i < n; ++i)
      for (std::size_t j = r; j < k; ++j) {
        int v = val(a[i][colmap[j]]);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (bi == n) break;
    std::swap(a[bi], a[r]);
    std::swap(b[bi], b[r]);
    std::swap(colmap[bj], colmap[r]);
    const std::size_t c = colmap[r];
    const Integer pv = power(p, best);
    const Integer unit = a[r][c] / pv;
    Integer inv = 1;
    {
      // inverse of a unit mod p^T by Euclid
      Integer r0 = unit % mod, r1 = mod, s0 = 1, s1 = 0;
      while (r1 != 0) {
        Integer t = r0 / r1, u = r0 - t * r1;
        r0 = r1;
        r1 = u;
        u = s0 - t * s1;
        s0 = s1;
        s1 = u;
      }
      inv = s0;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Integer f = ((a[i][c] / pv) * inv) % mod;
      for (std::size_t j = 0; j < k; ++j) {
        a[i][j] = (a[i][j] - f * a[r][j]) % mod;
        if (a[i][j] < 0) a[i][j] += mod;
      }
      b[i] = (b[i] - f * b[r]) % mod;
      if (b[i] < 0) b[i] += mod;
    }
    if (val(b[r]) < best) return false;
  }
  for (std::size_t i = r; i < n; ++i)
    if (b[i] % mod != 0) return false;
  return true;
}

}  // namespace

Rational det(const QMat& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  Integer scale;
  ZMat z = scaled_integer(m, scale);
  Integer d = bareiss(z).det;
  Rational s = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i) s *= Rational(scale);
  return Rational(d) / s;
}

bool in_lattice(const QMat& b, const QVec& x) {
  Rational d = det(b);
  if (d == 0) throw InputError("degenerate lattice basis");
  for (Eigen::Index j = 0; j < b.rows(); ++j) {
    QMat c = b;
    c.row(j) = x;
    Rational q = det(c) / d;
    if (denominator(q) != 1) return false;
  }
  return true;
}

bool member_at(const GroupDescription& x, const QVec& q, Prime p) {
  const int n = x.rank();
  int K = 0;
  for (int i = 0; i < n; ++i) K = std::max(K, vden(q(i), p));
  if (K == 0) return true;

  std::vector<QVec> fin;  // p^{-e} v
  std::vector<QVec> inf;  // integral, no common factor p
  int mu = 0;
  for (auto& d : x.directives()) {
    Exponent e = d.s.at(p);
    if (e == kInf) {
      Integer scale;
      ZMat z = scaled_integer(QMat(d.v), scale);
      int content = 1 << 30;
      for (int i = 0; i < n; ++i)
        if (z(0, i) != 0) content = std::min(content, vnum(z(0, i), p));
      QVec u(n);
      Integer pc = power(p, content);
      for (int i = 0; i < n; ++i) u(i) = Rational(z(0, i) / pc);
      inf.push_back(u);
    } else {
      QVec w = d.v / Rational(power(p, int(e)));
      for (int i = 0; i < n; ++i) mu = std::max(mu, vden(w(i), p));
      fin.push_back(w);
    }
  }
  // a nonsingular maximal minor of the divisible directions bounds how far they must be divided
  int delta = 0;
  if (!inf.empty()) {
    ZMat z(Eigen::Index(inf.size()), n);
    for (std::size_t i = 0; i < inf.size(); ++i)
      for (int j = 0; j < n; ++j) z(Eigen::Index(i), j) = numerator(inf[i](j));
    Bareiss b = bareiss(z);
    ZMat minor(b.rank, b.rank);
    for (int i = 0; i < b.rank; ++i)
      for (int j = 0; j < b.rank; ++j) minor(i, j) = z(b.rows[std::size_t(i)], b.cols[std::size_t(j)]);
    delta = vnum(bareiss(minor).det, p);
  }
  const int E = K + mu + delta;
  const int T = std::max({K, mu, inf.empty() ? 0 : E});
  const Integer pT = power(p, T);

  std::vector<QVec> gens = fin;
  for (auto& u : inf) gens.push_back(u / Rational(power(p, E)));
  std::vector<std::vector<Integer>> a(std::size_t(n), std::vector<Integer>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (int i = 0; i < n; ++i) a[std::size_t(i)][j] = pmod(gens[j](i) * Rational(pT), pT);
  std::vector<Integer> b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) b[std::size_t(i)] = pmod(q(i) * Rational(pT), pT);
  return solvable_mod(std::move(a), std::move(b), p, T);
}

bool member(const GroupDescription& x, const QVec& q) {
  if (q.size() != x.rank()) throw InputError("dimension mismatch");
  Integer d = 1;
  for (int i = 0; i < q.size(); ++i) d = lcm(d, Integer(denominator(q(i))));
  if (d == 1) return true;
  for (Prime p : prime_factors(d))
    if (!member_at(x, q, p)) return false;
  return true;
}

Height height(const GroupDescription& x, Prime p, const QVec& z, int N) {
  Height h;
  Rational pj = 1;
  for (int j = 1; j <= N; ++j) {
    pj *= Rational(p);
    if (!member(x, QVec(z / pj))) {
      h.value = j - 1;
      return h;
    }
  }
  h.value = N;
  h.saturated = true;
  return h;
}

Exactness exactness(const StdRep& s, Prime p, int N) {
  const std::size_t m = s.rows.size();
  auto ctx = context(p, N, int(m));
  const std::uint64_t pn = ctx.modulus.convert_to<std::uint64_t>();
  std::vector<int> e(m);
  for (std::size_t j = 0; j < m; ++j) e[j] = int(std::min<Exponent>(s.rows[j].at(p), N));
  auto pw = [&](int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
  };
  std::uint64_t mid = 1, sub = 1, quo = 1;
  for (std::size_t j = 0; j < m; ++j) {
    mid *= pn;
    sub *= pw(N - e[j]);
    quo *= pw(e[j]);
  }
  // middle elements are mixed-radix codes over (Z/p^N)^m
  auto code_of = [&](const std::vector<std::uint64_t>& v) {
    std::uint64_t c = 0;
    for (std::size_t j = m; j-- > 0;) c = c * pn + v[j];
    return c;
  };
  std::vector<char> in_image(mid, 0), in_kernel(mid, 0);
  std::vector<std::uint64_t> t(m, 0), x(m);
  std::uint64_t images = 0;
  for (std::uint64_t idx = 0; idx < sub; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t j = 0; j < m; ++j) {
      std::uint64_t r = pw(N - e[j]);
      t[j] = rest % r;
      rest /= r;
      x[j] = (t[j] * pw(e[j])) % pn;
    }
    std::uint64_t c = code_of(x);
    if (!in_image[c]) ++images;
    in_image[c] = 1;
  }
  std::vector<char> hit(quo, 0);
  std::uint64_t hits = 0, kernel = 0;
  for (std::uint64_t c = 0; c < mid; ++c) {
    std::uint64_t rest = c, qcode = 0, mult = 1;
    bool zero = true;
    for (std::size_t j = 0; j < m; ++j) {
      std::uint64_t xj = rest % pn;
      rest /= pn;
      std::uint64_t r = xj % pw(e[j]);
      if (r) zero = false;
      qcode += r * mult;
      mult *= pw(e[j]);
    }
    if (!hit[qcode]) ++hits;
    hit[qcode] = 1;
    if (zero) {
      in_kernel[c] = 1;
      ++kernel;
    }
  }
  Exactness out;
  out.middle = Integer(mid);
  out.sub = Integer(sub);
  out.quotient = Integer(quo);
  bool same = true;
  for (std::uint64_t c = 0; c < mid; ++c)
    if (in_image[c] != in_kernel[c]) same = false;
  out.exact = same && images == sub && hits == quo && kernel == images && mid == sub * quo;
  return out;
}

bool divisible(const GroupDescription& hull, Prime p, int N) {
  const int n = hull.rank();
  context(p, 1, n);
  for (auto& d : hull.directives()) {
    Exponent e = d.s.at(p);
    int top = int(std::min<Exponent>(e, N));
    for (int j = 0; j <= top; ++j) {
      QVec x = d.v / Rational(power(p, j));
      // p-primary component of x modulo Z^n
      Integer dn = 1;
      for (int i = 0; i < n; ++i) dn = lcm(dn, Integer(denominator(x(i))));
      Integer pa = 1;
      while (dn % p == 0) {
        dn /= p;
        pa *= p;
      }
      if (pa == 1) continue;
      Rational scale = Rational(dn) * Rational(pmod(Rational(1, dn), pa));
      QVec y(n);
      for (int i = 0; i < n; ++i) {
        Rational v = x(i) * scale;
        Integer fl = numerator(v) / denominator(v);
        if (numerator(v) < 0 && Integer(numerator(v)) % Integer(denominator(v)) != 0) fl -= 1;
        y(i) = v - Rational(fl);
      }
      bool found = false;
      std::vector<std::uint64_t> z(std::size_t(n), 0);
      std::uint64_t total = 1;
      for (int i = 0; i < n; ++i) total *= p;
      for (std::uint64_t idx = 0; idx < total && !found; ++idx) {
        std::uint64_t rest = idx;
        QVec h(n);
        for (int i = 0; i < n; ++i) {
          h(i) = (y(i) + Rational(Integer(rest % p))) / Rational(p);
          rest /= p;
        }
        found = member_at(hull, h, p);
      }
      if (!found) return false;
    }
  }
  return true;
}

Integer torsion_count(const GroupDescription& x, Prime p, int N) {
  const int n = x.rank();
  auto ctx = context(p, N, n);
  if (ctx.modulus > Integer(1 << 16) || (n > 0 && pow(ctx.modulus, unsigned(n)) > Integer(1 << 16)))
    throw BoundError("torsion enumeration too large");
  const std::uint64_t pn = ctx.modulus.convert_to<std::uint64_t>();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= pn;
  Integer count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    QVec u(n);
    for (int i = 0; i < n; ++i) {
      u(i) = Rational(Integer(rest % pn)) / Rational(ctx.modulus);
      rest /= pn;
    }
    if (member_at(x, u, p)) count += 1;
  }
  return count;
}

std::string CheckLine::str() const {
  return "CHECK " + name + " " + hash + " " + (pass ? "PASS" : "FAIL") + " " + witness;
}

bool Report::all_pass() const {
  return std::all_of(lines.begin(), lines.end(), [](auto& l) { return l.pass; });
}

std::string Report::str() const {
  std::string s;
  for (auto& l : lines) s += l.str() + "\n";
  return s;
}

std::string instance_hash(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

QMat random_basis(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> entry(-16, 16);
  std::uniform_int_distribution<int> dpick(0, 4);
  const int dens[] = {1, 1, 2, 3, 4};
  for (;;) {
    QMat b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = Rational(entry(rng), dens[dpick(rng)]);
    if (det(b) != 0) return b;
  }
}

bool contains_all(const QMat& big, const QMat& small) {
  for (Eigen::Index i = 0; i < small.rows(); ++i)
    if (!in_lattice(big, QVec(small.row(i)))) return false;
  return true;
}

}  // namespace

Report lattice_laws(std::uint64_t seed, int trials, int max_rank) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rank_pick(1, std::max(1, max_rank));
  std::uniform_int_distribution<int> small(2, 6);
  const char* names[] = {"lattice.closure", "lattice.index", "lattice.multiplicativity", "lattice.scaling",
                         "lattice.mu_preimage", "lattice.extension"};
  std::vector<CheckLine> lines;
  for (auto* nm : names) {
    CheckLine l;
    l.name = nm;
    l.hash = instance_hash(std::string(nm) + ":" + std::to_string(seed) + ":" + std::to_string(trials));
    lines.push_back(l);
  }
  auto fail = [&](int law, const std::string& w) {
    if (lines[std::size_t(law)].pass) {
      lines[std::size_t(law)].pass = false;
      lines[std::size_t(law)].witness = w;
    }
  };

  for (int t = 0; t < trials; ++t) {
    int n = rank_pick(rng);
    QMat b1, b2;
    if (t == 0) {  // degenerate pair
      b1 = random_basis(rng, n);
      b2 = b1;
    } else if (t == 1) {  // Z^2 against diag(1,6)
      n = 2;
      b1 = QMat::Identity(2, 2);
      b2 = QMat::Identity(2, 2);
      b2(1, 1) = 6;
    } else {
      b1 = random_basis(rng, n);
      b2 = random_basis(rng, n);
    }
    Lattice l1 = hnf_basis(b1), l2 = hnf_basis(b2);
    const std::string tag = "trial " + std::to_string(t) + " L1=[" + to_string(l1.basis()) + "] L2=[" + to_string(l2.basis()) + "]";

    // closure: sum contains both, meet inside both, det identity, and sampled meet points land in the meet
    Lattice s = lattice_sum(l1, l2), m = lattice_meet(l1, l2);
    Rational ds = det(s.basis()), dm = det(m.basis()), d1 = det(l1.basis()), d2 = det(l2.basis());
    bool closure = ds != 0 && dm != 0 && contains_all(s.basis(), l1.basis()) && contains_all(s.basis(), l2.basis()) &&
                   contains_all(l1.basis(), m.basis()) && contains_all(l2.basis(), m.basis()) &&
                   abs(ds * dm) == abs(d1 * d2);
    if (closure && n <= 2) {
      for (int c0 = -3; c0 <= 3 && closure; ++c0)
        for (int c1 = -3; c1 <= 3 && closure; ++c1) {
          QVec c(n);
          c(0) = c0;
          if (n > 1) c(1) = c1;
          QVec xv = c * l1.basis();
          if (in_lattice(l2.basis(), xv) && !in_lattice(m.basis(), xv)) closure = false;
        }
    }
    if (!closure) fail(0, tag);

    // index: symbolic value equals the Cramer-side determinant ratio
    Integer i_s1 = lattice_index(s, l1), i_1m = lattice_index(l1, m), i_sm = lattice_index(s, m);
    if (Rational(i_s1) != abs(d1 / ds) || Rational(i_1m) != abs(dm / d1) || i_s1 < 1) fail(1, tag);
    if (i_sm != i_s1 * i_1m) fail(2, tag);

    for (int dir = 0; dir < 2; ++dir) {
      const Lattice& a = dir ? l2 : l1;
      const Lattice& b = dir ? l1 : l2;
      Integer k = scaling_witness(a, b);
      bool ok = k >= 1 && contains_all(b.basis(), QMat(a.basis() * Rational(k)));
      if (ok && k > 1)
        for (Prime q : prime_factors(k))
          if (contains_all(b.basis(), QMat(a.basis() * Rational(k / q)))) ok = false;
      if (t == 1 && dir == 0 && k != 6) ok = false;
      if (!ok) fail(3, tag + " k=" + k.str());
    }

    // preimage of L1 under multiplication by k is (1/k)L1, index k^n
    int k = small(rng);
    Lattice pre = hnf_basis(QMat(l1.basis() / Rational(k)));
    Integer kn = 1;
    for (int i = 0; i < n; ++i) kn *= k;
    bool mu = contains_all(pre.basis(), l1.basis()) && contains_all(l1.basis(), QMat(pre.basis() * Rational(k))) &&
              lattice_index(pre, l1) == kn && abs(det(l1.basis()) / det(pre.basis())) == Rational(kn);
    if (!mu) fail(4, tag + " k=" + std::to_string(k));

    // adjoining x/k for x in L1 gives a lattice of index dividing k
    QVec c(n);
    for (int i = 0; i < n; ++i) c(i) = Rational(small(rng) - 4);
    QVec xv = (c * l1.basis()) / Rational(k);
    QMat gens(n + 1, n);
    gens << l1.basis(), xv;
    Lattice ext = hnf_basis(gens);
    Integer ie = lattice_index(ext, l1);
    bool ok = contains_all(ext.basis(), l1.basis()) && in_lattice(ext.basis(), xv) && Integer(k) % ie == 0 &&
              abs(det(l1.basis()) / det(ext.basis())) == Rational(ie);
    if (!ok) fail(5, tag + " x=" + to_string(xv));
  }
  for (auto& l : lines)
    if (l.pass) l.witness = "trials=" + std::to_string(trials);
  return {lines};
}

}  // namespace protori::oracle
