// Acceptance battery: one line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "protori/errors.hpp"
#include "protori/local.hpp"
#include "protori/oracle.hpp"
#include "protori/protorus.hpp"
#include "protori/report.hpp"
#include "protori/sampling.hpp"

#ifndef PROTORI_CLI
#define PROTORI_CLI "protori"
#endif

using namespace protori;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// every descriptor built by any suite passes through here
struct ChainLedger {
  std::size_t seen = 0, violations = 0;
  std::string first_bad;
  ProtorusDescriptor operator()(const GroupDescription& x) {
    ProtorusDescriptor g = from_dual(x);
    ++seen;
    if (!chain_holds(g)) {
      ++violations;
      if (first_bad.empty()) first_bad = x.str();
    }
    return g;
  }
} describe;

const std::vector<Prime> kSmallPrimes{2, 3, 5, 7, 11, 13};

// 1 ---------------------------------------------------------------------------
Outcome membership() {
  Rng rng(101);
  auto start = Clock::now();
  int total = 0, agree = 0;
  std::string bad;
  while (total < 1200) {
    GroupDescription x = random_group(rng);
    describe(x);
    std::vector<Prime> dens = special_primes(x);
    dens.push_back(2);
    for (int k = 0; k < 4; ++k) {
      QVec q;
      switch (k) {
        case 0: q = random_member(rng, x); break;
        case 1: q = random_vector(rng, x.rank(), dens, 64); break;
        default: {
          // a member nudged by a small p-adic step
          q = random_member(rng, x);
          Prime p = dens[std::size_t(uniform(rng, 0, int(dens.size()) - 1))];
          q(uniform(rng, 0, x.rank() - 1)) += Rational(1, Integer(ipow(p, uniform(rng, 1, 3))));
        }
      }
      ++total;
      if (member(x, q) == oracle::member(x, q))
        ++agree;
      else if (bad.empty())
        bad = x.str() + " q=" + to_string(q);
    }
  }
  double t = seconds_since(start);
  std::ostringstream os;
  os << agree << "/" << total << " agree in " << std::fixed << std::setprecision(2) << t << " s";
  if (!bad.empty()) os << "; first disagreement " << bad;
  return {agree == total && t < 30.0, os.str()};
}

// 2 ---------------------------------------------------------------------------
Outcome heights() {
  Rng rng(202);
  const int N = 8;
  int total = 0, finite = 0, infinite = 0, bad_count = 0;
  std::string bad;
  while (total < 600) {
    GroupDescription x = random_group(rng);
    describe(x);
    std::vector<Prime> ps = special_primes(x);
    ps.push_back(kSmallPrimes[std::size_t(uniform(rng, 0, 5))]);
    QVec z = random_member(rng, x);
    if (z.isZero()) continue;
    Prime p = ps[std::size_t(uniform(rng, 0, int(ps.size()) - 1))];
    Exponent h = p_height(x, p, z);
    oracle::Height o = oracle::height(x, p, z, N);
    ++total;
    bool ok;
    if (h == kInf) {
      ++infinite;
      ok = o.saturated;
    } else {
      ++finite;
      ok = h >= N ? o.saturated : (!o.saturated && o.value == h);
    }
    if (!ok) {
      ++bad_count;
      if (bad.empty())
        bad = x.str() + " z=" + to_string(z) + " p=" + std::to_string(p) + " symbolic " + ex_str(h) + " oracle " +
              std::to_string(o.value);
    }
  }
  std::ostringstream os;
  os << total - bad_count << "/" << total << " agree (" << finite << " finite, " << infinite
     << " infinite confirmed to depth " << N << ")";
  if (!bad.empty()) os << "; first disagreement " << bad;
  return {bad_count == 0, os.str()};
}

// 3 ---------------------------------------------------------------------------
bool canonical_invariants(const StdRep& s) {
  if (!s.rows.empty() && s.rows.back().is_one()) return false;
  std::vector<Prime> ps = support(s);
  ps.push_back(97);  // stands in for the default
  for (Prime p : ps)
    for (std::size_t j = 1; j < s.rows.size(); ++j)
      if (s.rows[j - 1].at(p) < s.rows[j].at(p)) return false;
  for (auto& r : s.rows)
    if (r.is_one()) return false;
  return true;
}

Outcome canonical_form() {
  Rng rng(303);
  int bad = 0;
  std::string first;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    auto raw = random_raw_rows(rng, 5, {2, 3, 5, 7});
    StdRep s = std_rep(raw);
    auto shuffled = raw;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    bool ok = std_rep(s.rows) == s && std_rep(shuffled) == s && canonical_invariants(s);
    // per-prime multisets of exponents are preserved (ignoring zero rows)
    for (Prime p : {2, 3, 5, 7, 97}) {
      std::multiset<Exponent> a, b;
      for (auto& r : raw)
        if (r.at(p)) a.insert(r.at(p));
      for (auto& r : s.rows)
        if (r.at(p)) b.insert(r.at(p));
      ok = ok && a == b;
    }
    if (!ok && bad++ == 0) first = s.str();
  }
  std::string d = std::to_string(trials - bad) + "/" + std::to_string(trials) +
                  " inputs idempotent, permutation invariant, sorted, no trailing zero row";
  if (bad) d += "; first failure " + first;
  return {bad == 0, d};
}

// 4 ---------------------------------------------------------------------------
Outcome isogeny_invariance() {
  Rng rng(404);
  int trials = 0, violations = 0, group_checks = 0;
  std::string first;
  while (trials < 500) {
    GroupDescription x = random_group(rng);
    ProtorusDescriptor g = describe(x);
    const StdRep& s = g.delta_star;
    // finite exponent perturbation at up to five primes
    std::vector<Prime> pool{2, 3, 5, 7, 11, 13, 17};
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::size_t(uniform(rng, 1, 5)));
    std::vector<Supernatural> rows;
    for (auto& r : s.rows) {
      auto exc = r.exceptions();
      for (Prime p : pool)
        if (r.at(p) != kInf) exc[p] = uniform(rng, 0, 4);
      rows.emplace_back(exc, r.default_inf());
    }
    // a few extra purely finite rows do not move dim_nA either
    for (int k = uniform(rng, 0, 2); k > 0; --k) rows.push_back(Supernatural::prime_power(pool[0], uniform(rng, 1, 3)));
    StdRep perturbed = std_rep(rows);
    Integer n = 1;
    for (Prime p : pool) n *= ipow(p, uniform(rng, 0, 3));
    StdRep scaled_rep = scale(s, n);
    bool ok = dim_nA(perturbed) == g.dim_nA && dim_nA(scaled_rep) == g.dim_nA &&
              profinite_isogenous(perturbed, s) && profinite_isogenous(scaled_rep, s);
    // the same at group level: a finite-index enlargement X' ⊇ X
    QVec v = random_vector(rng, x.rank(), {pool[0]}, 1);
    if (!v.isZero()) {
      Prime p = pool[0];
      GroupDescription bigger = x.with({QVec(v / Rational(ipow(p, uniform(rng, 1, 3)))), Supernatural::one()});
      ok = ok && describe(bigger).dim_nA == g.dim_nA;
      // X written against the lattice nZ^n, i.e. the scaled copy (1/n)X
      GroupDescription shrunk = in_basis(x, scaled(Lattice::standard(x.rank()), Rational(n)));
      ok = ok && describe(shrunk).dim_nA == g.dim_nA;
      ++group_checks;
    }
    ++trials;
    if (!ok && violations++ == 0) first = x.str();
  }
  std::string d = std::to_string(trials) + " trials, " + std::to_string(group_checks) + " group-level, " +
                  std::to_string(violations) + " violations";
  if (violations) d += "; first " + first;
  return {violations == 0, d};
}

// 5 ---------------------------------------------------------------------------
Outcome exactness() {
  const std::array<Exponent, 4> ex{0, 1, 2, kInf};
  int cases = 0, bad = 0;
  std::string first;
  for (Prime p : {2, 3, 5}) {
    Prime q = p == 2 ? 3 : 2;
    for (int N = 1; N <= 4; ++N)
      for (int m = 0; m <= 2; ++m) {
        int combos = 1;
        for (int j = 0; j < m; ++j) combos *= 8;
        for (int c = 0; c < combos; ++c) {
          std::vector<Supernatural> raw;
          int rest = c;
          for (int j = 0; j < m; ++j) {
            Exponent e = ex[std::size_t(rest % 4)];
            int other = (rest / 4) % 2;
            rest /= 8;
            raw.emplace_back(std::map<Prime, Exponent>{{p, e}, {q, other}}, false);
          }
          StdRep s = std_rep(raw);
          oracle::Exactness r = oracle::exactness(s, p, N);
          bool ok = r.exact && r.middle == r.sub * r.quotient && r.quotient == truncate(s, p, N).order();
          ++cases;
          if (!ok && bad++ == 0) first = "p=" + std::to_string(p) + " N=" + std::to_string(N) + " S=" + s.str();
        }
      }
  }
  std::string d = std::to_string(cases - bad) + "/" + std::to_string(cases) + " cases exact with |middle| = |sub|·|quotient|";
  if (bad) d += "; first failure " + first;
  return {bad == 0, d};
}

// 6 ---------------------------------------------------------------------------
Outcome hulls() {
  Rng rng(606);
  GroupShape shape;
  shape.primes = {2, 3, 5, 7};
  int groups = 0, checks = 0, bad = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (bad++ == 0) first = what;
  };
  while (groups < 200) {
    GroupDescription x = random_group(rng, shape);
    describe(x);
    const int n = x.rank();
    for (HullMode mode : {HullMode::inf, HullMode::fininf}) {
      GroupDescription y = qd_hull(x, mode, LineScope::saturated);
      std::string tag = (mode == HullMode::inf ? "inf " : "fininf ") + x.str();
      if (!hom_check(QMat::Identity(n, n), x, y)) fail("not extensive: " + tag);
      for (Prime p : active_primes(x, mode).primes) {
        if (p > 7) continue;
        ++checks;
        if (!oracle::divisible(y, p, 6)) fail("not divisible at " + std::to_string(p) + ": " + tag);
      }
      if (mode == HullMode::inf && !same_group(qd_hull(y, mode, LineScope::saturated), y))
        fail("not idempotent: " + tag);
    }
    ++groups;
  }
  std::string d = std::to_string(groups) + " groups, " + std::to_string(checks) + " divisibility checks at depth 6, " +
                  std::to_string(bad) + " failures";
  if (bad) d += "; first " + first;
  return {bad == 0, d};
}

// 8 ---------------------------------------------------------------------------
struct Row {
  Exponent s, m;
  int table_case;
  const char *D, *C, *quotient;
};

Outcome envelope() {
  // the three-case table written out by hand
  const std::vector<Row> table{
      {kInf, 0, 1, "Q^_2", "Z^_2", "Z(2^inf)"},     {kInf, 3, 1, "Q^_2", "Z^_2", "Z(2^inf)"},
      {kInf, kInf, 1, "Q^_2", "Z^_2", "Z(2^inf)"},  {1, kInf, 2, "Z(2^inf)", "Z/2^1", "Z(2^inf)"},
      {2, kInf, 2, "Z(2^inf)", "Z/2^2", "Z(2^inf)"}, {5, kInf, 2, "Z(2^inf)", "Z/2^5", "Z(2^inf)"},
      {1, 2, 3, "Z/2^3", "Z/2^1", "Z/2^2"},         {1, 0, 3, "Z/2^1", "Z/2^1", "0"},
      {2, 1, 3, "Z/2^3", "Z/2^2", "Z/2^1"},         {3, 3, 3, "Z/2^6", "Z/2^3", "Z/2^3"},
      {1, 5, 3, "Z/2^6", "Z/2^1", "Z/2^5"},         {4, 2, 3, "Z/2^6", "Z/2^4", "Z/2^2"},
  };
  int bad = 0;
  std::string first;
  for (auto& r : table) {
    EnvelopeEntry e = envelope_case(2, r.s, r.m);
    bool ok = e.table_case == r.table_case && e.D.str() == r.D && e.C.str() == r.C && e.quotient.str() == r.quotient;
    if (!ok && bad++ == 0)
      first = "s=" + ex_str(r.s) + " m=" + ex_str(r.m) + " got " + e.D.str() + "/" + e.C.str() + "=" + e.quotient.str();
  }
  // finite rows: enumerate D = Z/p^{s+m} modulo the image of C = Z/p^s
  int enumerated = 0;
  for (Prime p : {2, 3, 5})
    for (int s = 1; s <= 6; ++s)
      for (int m = 0; s + m <= 6; ++m) {
        EnvelopeEntry e = envelope_case(p, s, m);
        std::uint64_t d = 1, c = 1;
        for (int i = 0; i < s + m; ++i) d *= p;
        for (int i = 0; i < s; ++i) c *= p;
        std::uint64_t step = d / c;  // C sits inside D as the multiples of p^m
        std::vector<char> seen(step, 0);
        std::uint64_t cosets = 0, max_order = 1;
        for (std::uint64_t x = 0; x < d; ++x) {
          std::uint64_t r = x % step;
          if (!seen[r]) {
            seen[r] = 1;
            ++cosets;
            std::uint64_t ord = 1, y = r;
            while (y % step) {
              y = (y + r) % step;
              ++ord;
            }
            max_order = std::max(max_order, ord);
          }
        }
        // cyclic of order p^m: the coset count equals the largest element order
        Symbol expect = cyclic(p, m);
        std::uint64_t formal = 1;
        if (expect.kind == Piece::cyclic)
          for (int i = 0; i < expect.a; ++i) formal *= p;
        bool ok = e.table_case == 3 && e.quotient == expect && cosets == formal && max_order == cosets &&
                  e.D == cyclic(p, s + m) && e.C == cyclic(p, s);
        ++enumerated;
        if (!ok && bad++ == 0)
          first = "p=" + std::to_string(p) + " s=" + std::to_string(s) + " m=" + std::to_string(m) + " formal " +
                  e.quotient.str() + " enumerated order " + std::to_string(cosets);
      }
  std::string d = std::to_string(table.size()) + " table rows, " + std::to_string(enumerated) +
                  " enumerated finite rows, " + std::to_string(bad) + " mismatches";
  if (bad) d += "; first " + first;
  return {bad == 0, d};
}

// 9 ---------------------------------------------------------------------------
Outcome lattice_laws() {
  auto start = Clock::now();
  oracle::Report r = oracle::lattice_laws(909, 500, 3);
  double t = seconds_since(start);
  std::ostringstream os;
  os << r.lines.size() << " laws over 500 trials in " << std::fixed << std::setprecision(2) << t << " s";
  for (auto& l : r.lines)
    if (!l.pass) os << "; " << l.str();
  return {r.all_pass() && t < 10.0, os.str()};
}

// 10 --------------------------------------------------------------------------
Outcome projective() {
  Rng rng(1010);
  int reps = 0, bad = 0, bookkept = 0;
  std::string first;
  while (reps < 200) {
    StdRep s = random_std_rep(rng, 3, {2, 3, 5});
    StdRep k = projective_kernel(s);
    // rows where Δ_j = Ẑ contribute nothing to the kernel
    bool ok = k.rows.size() <= s.rows.size();
    for (auto& row : k.rows)
      for (auto& [p, e] : row.exceptions()) ok = ok && (e == 0 || e == kInf);
    // truncated bookkeeping for Ẑ^m → Δ at small p, N
    for (Prime p : {2, 3, 5})
      for (int N = 1; N <= 4; ++N) {
        const std::size_t m = s.rows.size();
        std::uint64_t pn = 1, dom = 1;
        for (int i = 0; i < N; ++i) pn *= p;
        for (std::size_t j = 0; j < m; ++j) dom *= pn;
        if (dom > (1u << 16)) continue;
        std::vector<std::uint64_t> mod(m);
        for (std::size_t j = 0; j < m; ++j) {
          Exponent e = std::min<Exponent>(s.rows[j].at(p), N);
          mod[j] = 1;
          for (Exponent i = 0; i < e; ++i) mod[j] *= p;
        }
        std::set<std::vector<std::uint64_t>> image;
        std::uint64_t kernel = 0;
        for (std::uint64_t idx = 0; idx < dom; ++idx) {
          std::uint64_t rest = idx;
          std::vector<std::uint64_t> y(m);
          bool zero = true;
          for (std::size_t j = 0; j < m; ++j) {
            y[j] = (rest % pn) % mod[j];
            rest /= pn;
            zero = zero && y[j] == 0;
          }
          kernel += zero;
          image.insert(y);
        }
        ++bookkept;
        ok = ok && kernel * image.size() == dom && Integer(image.size()) == truncate(s, p, N).order();
        // the kernel is K mod p^N: one Z/p^{N-e} per row, e the p-exponent of Δ
        Integer kexp = 1;
        for (std::size_t j = 0; j < m; ++j) kexp *= Integer(pn / mod[j]);
        ok = ok && kexp == kernel;
      }
    ++reps;
    if (!ok && bad++ == 0) first = s.str();
  }
  std::string d = std::to_string(reps) + " kernels torsion-free, " + std::to_string(bookkept) +
                  " truncations with |ker|·|im| = |domain|, " + std::to_string(bad) + " failures";
  if (bad) d += "; first " + first;
  return {bad == 0, d};
}

// 11 --------------------------------------------------------------------------
Outcome lifting() {
  Rng rng(1111);
  GroupShape shape;
  shape.max_rank = 2;
  shape.max_directives = 2;
  shape.primes = {2, 3, 5, 7};
  shape.max_denominator = 16;
  int valid = 0, bad = 0, rejected = 0, confirmed = 0;
  std::string first;
  while (valid < 100) {
    GroupDescription x = random_group(rng, shape);
    GroupDescription y0 = random_group(rng, shape);
    const int n = x.rank(), m = y0.rank();
    QMat a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = Rational(Integer(uniform(rng, -3, 3)), Integer(uniform(rng, 0, 3) ? 1 : 2));
    describe(x);
    describe(y0);

    // unrepaired triple: any rejection must come with a real counterexample
    if (auto cx = hom_counterexample(a, x, y0)) {
      ++rejected;
      QVec image = *cx * a.transpose();
      if (oracle::member(x, *cx) && !oracle::member(y0, image))
        ++confirmed;
      else if (bad++ == 0)
        first = "unconfirmed rejection " + to_string(*cx);
    }

    // repaired codomain: Y = Y0 + A·X
    std::vector<Directive> dirs = y0.directives();
    for (int j = 0; j < n; ++j) dirs.push_back({QVec(unit_vec(n, j) * a.transpose()), Supernatural::one()});
    for (auto& d : x.directives()) dirs.push_back({QVec(d.v * a.transpose()), d.s});
    std::vector<Directive> kept;
    for (auto& d : dirs)
      if (!d.v.isZero()) kept.push_back(d);
    GroupDescription y(m, kept);
    describe(y);
    if (!hom_check(a, x, y)) {
      if (bad++ == 0) first = "repaired triple rejected: " + x.str() + " -> " + y.str();
      continue;
    }
    std::vector<Prime> ps;
    for (Prime p : special_primes(x))
      if (p <= 7) ps.push_back(p);
    for (Prime p : special_primes(y))
      if (p <= 7) ps.push_back(p);
    if (ps.empty()) ps.push_back(2);
    Prime p = ps[std::size_t(uniform(rng, 0, int(ps.size()) - 1))];
    int N = uniform(rng, 1, 4);
    LiftReport r = lift_morphism(a, x, y, p, N);
    Integer dom = 1;
    for (int b : r.domain_orders) dom *= ipow(p, b);
    bool ok = r.certificate && r.lands_in_codomain && r.kernel_order * r.image_order == dom;
    ++valid;
    if (!ok && bad++ == 0) first = "certificate failed: A=" + to_string(a) + " p=" + std::to_string(p) + " " + x.str();
  }
  std::string d = std::to_string(valid) + " certificates, " + std::to_string(confirmed) + "/" +
                  std::to_string(rejected) + " rejections confirmed by oracle counterexample";
  if (bad) d += "; first failure " + first;
  return {bad == 0 && confirmed == rejected, d};
}

// 12 --------------------------------------------------------------------------
std::string run(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Outcome determinism() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "protori_acceptance";
  fs::create_directories(dir);
  const std::vector<std::string> groups{
      "rank 1\ndir v=(1) s=2^inf\n",
      "rank 2\ndir v=(1/2,1/3) s=2^inf\ndir v=(0,1/5)\n",
      "rank 3\ndir v=(1/2,1/3,0) s=2^inf*5^2\ndir v=(0,1,1/4) s=3\ndir v=(1,0,1) s=1 default inf\n",
  };
  int runs = 0, bad = 0;
  std::string first;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    fs::path f = dir / ("g" + std::to_string(i) + ".txt");
    std::ofstream(f) << groups[i];
    for (const char* cmd : {"analyze", "analyze --format structured", "verify --seed 17 --trials 20",
                            "verify --seed 17 --trials 20 --format structured"}) {
      std::string sub(cmd);
      std::string head = sub.substr(0, sub.find(' '));
      std::string tail = sub.find(' ') == std::string::npos ? "" : sub.substr(sub.find(' '));
      std::string line = std::string(PROTORI_CLI) + " " + head + " " + f.string() + tail;
      int s1 = 0, s2 = 0;
      std::string a = run(line, s1), b = run(line, s2);
      ++runs;
      if ((a != b || s1 != s2 || s1 != 0 || a.empty()) && bad++ == 0) first = line;
    }
    // library path as well
    GroupDescription x = parse_group(groups[i]);
    auto r1 = report::render(report::verify(x, {4, 20, 17}), report::Format::text);
    auto r2 = report::render(report::verify(x, {4, 20, 17}), report::Format::text);
    if (r1 != r2 && bad++ == 0) first = "library verify " + std::to_string(i);
  }
  std::string d = std::to_string(runs) + " CLI command pairs byte-identical";
  if (bad) d += "; first difference " + first;
  return {bad == 0, d};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Entry> entries{
      {1, "membership oracle equivalence", membership},
      {2, "height oracle equivalence", heights},
      {3, "std_rep canonical form", canonical_form},
      {4, "dim_nA isogeny invariance", isogeny_invariance},
      {5, "truncated exactness", exactness},
      {6, "quotient-divisible hulls", hulls},
      {8, "periodic envelope", envelope},
      {9, "lattice laws", lattice_laws},
      {10, "projective resolution", projective},
      {11, "morphism lifting", lifting},
      {12, "CLI determinism", determinism},
  };
  std::map<int, std::pair<std::string, Outcome>> results;
  for (auto& e : entries) {
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    results[e.id] = {e.name, o};
  }
  // the chain ledger has now seen every descriptor the other suites built
  results[7] = {"chain invariant",
                {describe.violations == 0 && describe.seen > 0,
                 std::to_string(describe.seen) + " descriptors, " + std::to_string(describe.violations) +
                     " violations" + (describe.first_bad.empty() ? "" : "; first " + describe.first_bad)}};
  bool all = true;
  for (auto& [id, r] : results) {
    std::cout << "criterion " << id << " " << (r.second.pass ? "PASS" : "FAIL") << " " << r.first << ": "
              << r.second.detail << "\n";
    all = all && r.second.pass;
  }
  return all ? 0 : 1;
}
