#include "protori/sampling.hpp"

#include <algorithm>

namespace protori {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Integer random_denominator(Rng& rng, const std::vector<Prime>& primes, int max_den) {
  Integer d = 1;
  int steps = uniform(rng, 0, 3);
  for (int i = 0; i < steps; ++i) {
    Prime p = primes[std::size_t(uniform(rng, 0, int(primes.size()) - 1))];
    if (d * p <= max_den) d *= p;
  }
  return d;
}

Supernatural random_supernatural(Rng& rng, const GroupShape& shape) {
  int kind = uniform(rng, 0, 9);
  if (kind == 0) return Supernatural::one();
  std::map<Prime, Exponent> m;
  bool dflt = kind == 9;
  int count = uniform(rng, dflt ? 0 : 1, 2);
  for (int i = 0; i < count; ++i) {
    Prime p = shape.primes[std::size_t(uniform(rng, 0, int(shape.primes.size()) - 1))];
    int e = uniform(rng, dflt ? 0 : 1, shape.max_finite_exponent + 1);
    m[p] = e > shape.max_finite_exponent ? kInf : e;
  }
  return Supernatural(std::move(m), dflt);
}

}  // namespace

QVec random_vector(Rng& rng, int n, const std::vector<Prime>& primes, int max_den) {
  QVec v(n);
  for (int i = 0; i < n; ++i) v(i) = Rational(Integer(uniform(rng, -6, 6)), random_denominator(rng, primes, max_den));
  return v;
}

GroupDescription random_group(Rng& rng, const GroupShape& shape) {
  int n = uniform(rng, shape.min_rank, shape.max_rank);
  int k = uniform(rng, 0, shape.max_directives);
  std::vector<Directive> dirs;
  for (int i = 0; i < k; ++i) {
    QVec v(n);
    do {
      for (int j = 0; j < n; ++j) {
        int a = uniform(rng, -3, 3);
        v(j) = uniform(rng, 0, 2) == 0 ? Rational(a, random_denominator(rng, shape.primes, shape.max_denominator))
                                       : Rational(a);
      }
    } while (v.isZero());
    dirs.push_back({v, random_supernatural(rng, shape)});
  }
  return GroupDescription(n, std::move(dirs));
}

QVec random_member(Rng& rng, const GroupDescription& x) {
  const int n = x.rank();
  QVec q(n);
  for (int j = 0; j < n; ++j) q(j) = uniform(rng, -3, 3);
  for (auto& d : x.directives()) {
    if (uniform(rng, 0, 2) == 0) continue;
    Integer b = 1;
    for (auto& [p, e] : d.s.exceptions()) {
      int top = int(std::min<Exponent>(e, 3));
      b *= ipow(p, uniform(rng, 0, top));
    }
    if (d.s.default_inf()) {
      // some prime the exceptions do not mention
      Prime p = 2;
      while (d.s.exceptions().count(p)) p = next_prime(p);
      b *= ipow(p, uniform(rng, 0, 2));
    }
    q += d.v * Rational(Integer(uniform(rng, -3, 3)), b);
  }
  return q;
}

std::vector<Supernatural> random_raw_rows(Rng& rng, int max_rows, const std::vector<Prime>& primes) {
  int m = uniform(rng, 0, max_rows);
  std::vector<Supernatural> rows;
  for (int j = 0; j < m; ++j) {
    std::map<Prime, Exponent> mp;
    bool dflt = uniform(rng, 0, 5) == 0;
    for (Prime p : primes) {
      if (uniform(rng, 0, 1)) continue;
      int e = uniform(rng, 0, 3);
      mp[p] = e == 3 ? kInf : e;
    }
    rows.emplace_back(std::move(mp), dflt);
  }
  return rows;
}

StdRep random_std_rep(Rng& rng, int max_rows, const std::vector<Prime>& primes) {
  return std_rep(random_raw_rows(rng, max_rows, primes));
}

}  // namespace protori
