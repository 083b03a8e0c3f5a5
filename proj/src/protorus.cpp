#include "protori/protorus.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "protori/errors.hpp"
#include "protori/normal_form.hpp"

namespace protori {

ProtorusDescriptor from_dual(const GroupDescription& x) {
  ProtorusDescriptor g;
  g.dual = x;
  g.dim = x.rank();
  g.delta_star = quotient_structure(x, Lattice::standard(x.rank()));
  g.dim_nA = dim_nA(g.delta_star);
  g.split = canonical_split(x);
  return g;
}

bool chain_holds(const ProtorusDescriptor& g) {
  return g.dim_nA == dim_nA(g.delta_star) && g.dim_nA <= width_nA(g.delta_star) && width_nA(g.delta_star) <= g.dim;
}

// ---- quotient-divisible hulls

Activity active_primes(const GroupDescription& x, HullMode mode) {
  const int n = x.rank();
  Activity act;
  for (Prime p : special_primes(x)) {
    auto ls = local_structure(x, p);
    auto e = ls.exponents();
    bool finite_part = std::any_of(e.begin(), e.end(), [](Exponent v) { return v != kInf && v > 0; });
    bool on = mode == HullMode::inf ? (finite_part || ls.d > 0) : (finite_part || (ls.d > 0 && ls.d < n));
    if (on) act.primes.push_back(p);
  }
  int d = local_structure(x, 0).d;
  act.generic = mode == HullMode::inf ? d > 0 : (d > 0 && d < n);
  return act;
}

bool same_group(const GroupDescription& x, const GroupDescription& y) {
  if (x.rank() != y.rank()) return false;
  QMat id = QMat::Identity(x.rank(), x.rank());
  return hom_check(id, x, y) && hom_check(id, y, x);
}

namespace {

Supernatural promote(const Supernatural& h, HullMode mode) {
  std::map<Prime, Exponent> m;
  for (auto& [p, e] : h.exceptions()) {
    bool up = mode == HullMode::inf ? e > 0 : (e > 0 && e != kInf);
    m[p] = up ? kInf : 0;
  }
  return Supernatural(std::move(m), mode == HullMode::inf && h.default_inf());
}

bool implied(const GroupDescription& x, const Directive& d) {
  GroupDescription one(x.rank(), {d});
  return hom_check(QMat::Identity(x.rank(), x.rank()), one, x);
}

}  // namespace

GroupDescription qd_hull(const GroupDescription& x, HullMode mode, LineScope scope) {
  const int n = x.rank();
  std::vector<Directive> cand;
  if (scope == LineScope::directives) {
    std::vector<QVec> lines;
    std::set<std::string> seen;
    auto add = [&](const QVec& z) {
      QVec h = to_rational(ZMat(hemisphere_rep(z).coords));
      if (seen.insert(to_string(h)).second) lines.push_back(h);
    };
    for (auto& dir : x.directives()) add(dir.v);
    for (int j = 0; j < n; ++j) add(unit_vec(n, j));
    for (auto& z : lines) {
      Supernatural s = promote(height_seq(x, z), mode);
      if (!s.is_one()) cand.push_back({z, s});
    }
  } else {
    Activity act = active_primes(x, mode);
    std::map<Prime, Exponent> m;
    for (Prime p : special_primes(x)) m[p] = 0;
    for (Prime p : act.primes) m[p] = kInf;
    Supernatural s(std::move(m), act.generic);
    if (!s.is_one())
      for (int j = 0; j < n; ++j) cand.push_back({unit_vec(n, j), s});
  }
  GroupDescription out = x;
  for (auto& d : cand)
    if (!implied(out, d)) out = out.with(d);
  return out;
}

// ---- Corollary 6 exponents

std::pair<int, int> HullExponents::get(Prime p) const {
  auto it = at.find(p);
  return it == at.end() ? generic : it->second;
}

HullExponents universal_resolution(const ProtorusDescriptor& g) {
  if (g.split.r > 0) throw InputError("protorus has a torus factor (r = " + std::to_string(g.split.r) + ")");
  const auto& rows = g.delta_star.rows;
  HullExponents h;
  for (auto& r : rows)
    if (r.default_inf()) ++h.generic.first;
  auto count = [&](Prime p) {
    std::pair<int, int> rs{0, 0};
    for (auto& r : rows) {
      Exponent e = r.at(p);
      if (e == kInf) ++rs.first;
      else if (e > 0) ++rs.second;
    }
    return rs;
  };
  for (Prime p : support(g.delta_star)) {
    auto rs = count(p);
    if (rs != h.generic) h.at[p] = rs;
  }
  Supernatural m_inf = sup_heights(qd_hull(g.dual, HullMode::inf, LineScope::saturated));
  std::vector<Prime> ps = support(g.delta_star);
  for (auto& kv : m_inf.exceptions()) ps.push_back(kv.first);
  sort_unique(ps);
  for (Prime p : ps) {
    if (m_inf.at(p) != kInf) continue;
    int zeros = int(std::count_if(rows.begin(), rows.end(), [&](auto& r) { return r.at(p) == 0; }));
    if (zeros) h.activated_zero_rows[p] = zeros;
  }
  return h;
}

std::vector<std::pair<Prime, int>> torsion_part(const HullExponents& h) {
  std::vector<std::pair<Prime, int>> t;
  for (auto& [p, rs] : h.at)
    if (rs.second > 0) t.emplace_back(p, rs.second);
  return t;
}

std::string torsion_str(const std::vector<std::pair<Prime, int>>& t) {
  if (t.empty()) return "0";
  std::string s;
  for (auto& [p, k] : t) {
    if (!s.empty()) s += " + ";
    s += "Z(" + std::to_string(p) + "^inf)";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

// ---- Proposition 6 envelope

std::string Symbol::str() const {
  const std::string ps = p ? std::to_string(p) : "p";
  switch (kind) {
    case Piece::zero: return "0";
    case Piece::qhat: return "Q^_" + ps;
    case Piece::zhat: return "Z^_" + ps;
    case Piece::prufer: return "Z(" + ps + "^inf)";
    case Piece::cyclic: return "Z/" + ps + "^" + std::to_string(a);
  }
  return "?";
}

Symbol cyclic(Prime p, Exponent a) {
  if (a == 0) return {Piece::zero, p, 0};
  return {Piece::cyclic, p, int(a)};
}

EnvelopeEntry envelope_case(Prime p, Exponent s, Exponent m) {
  EnvelopeEntry e;
  e.p = p;
  e.s = s;
  e.m = m;
  if (s == kInf) {
    e.table_case = 1;
    e.D = {Piece::qhat, p, 0};
    e.C = {Piece::zhat, p, 0};
    e.quotient = {Piece::prufer, p, 0};
  } else if (m == kInf) {
    e.table_case = 2;
    e.D = {Piece::prufer, p, 0};
    e.C = cyclic(p, s);
    e.quotient = {Piece::prufer, p, 0};
  } else {
    e.table_case = 3;
    e.D = cyclic(p, s + m);
    e.C = cyclic(p, s);
    e.quotient = cyclic(p, m);
  }
  return e;
}

std::vector<Symbol> PeriodicEnvelope::quotient() const {
  std::vector<Symbol> q;
  for (auto& e : entries)
    if (e.quotient.kind != Piece::zero) q.push_back(e.quotient);
  return q;
}

PeriodicEnvelope periodic_envelope(const StdRep& delta_star, const Supernatural& m) {
  PeriodicEnvelope env;
  std::vector<Prime> ps = support(delta_star);
  for (auto& kv : m.exceptions()) ps.push_back(kv.first);
  sort_unique(ps);
  ps.push_back(0);
  for (Prime p : ps) {
    Exponent mp = p ? m.at(p) : m.default_exponent();
    for (std::size_t j = 0; j < delta_star.rows.size(); ++j) {
      auto& row = delta_star.rows[j];
      Exponent s = p ? row.at(p) : row.default_exponent();
      if (s == 0 && mp == 0) continue;
      EnvelopeEntry e = envelope_case(p, s, mp);
      e.row = int(j) + 1;
      env.entries.push_back(e);
    }
  }
  return env;
}

// ---- subgroups of a finite model of D/C

namespace {

struct FiniteModel {
  std::vector<Prime> primes;
  std::vector<int> exps;
  std::vector<std::uint32_t> radix;
  std::size_t size = 1;

  std::vector<std::uint32_t> decode(std::size_t code) const {
    std::vector<std::uint32_t> c(radix.size());
    for (std::size_t i = 0; i < radix.size(); ++i) {
      c[i] = std::uint32_t(code % radix[i]);
      code /= radix[i];
    }
    return c;
  }
  std::size_t encode(const std::vector<std::uint32_t>& c) const {
    std::size_t code = 0;
    for (std::size_t i = radix.size(); i-- > 0;) code = code * radix[i] + c[i];
    return code;
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % radix[i];
    return encode(x);
  }
  std::size_t mul(std::size_t a, std::uint64_t k) const {
    auto x = decode(a);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::uint32_t((std::uint64_t(x[i]) * (k % radix[i])) % radix[i]);
    return encode(x);
  }
};

FiniteAbelian iso_type(const FiniteModel& g, const std::vector<std::size_t>& h) {
  std::vector<std::pair<Prime, int>> f;
  std::set<Prime> ps(g.primes.begin(), g.primes.end());
  for (Prime p : ps) {
    int top = 0;
    for (std::size_t i = 0; i < g.primes.size(); ++i)
      if (g.primes[i] == p) top = std::max(top, g.exps[i]);
    // c_k = log_p |H[p^k]|; factors with a_i ≥ k number c_k - c_{k-1}
    std::vector<int> c(std::size_t(top) + 1, 0);
    std::uint64_t pk = 1;
    for (int k = 1; k <= top; ++k) {
      pk *= p;
      std::size_t cnt = 0;
      for (auto x : h)
        if (g.mul(x, pk) == 0) ++cnt;
      int lg = 0;
      while (cnt > 1) {
        cnt /= p;
        ++lg;
      }
      c[std::size_t(k)] = lg;
    }
    for (int k = top; k >= 1; --k) {
      int at_least_k = c[std::size_t(k)] - c[std::size_t(k) - 1];
      int at_least_k1 = k < top ? c[std::size_t(k) + 1] - c[std::size_t(k)] : 0;
      for (int i = 0; i < at_least_k - at_least_k1; ++i) f.emplace_back(p, k);
    }
  }
  return FiniteAbelian(std::move(f));
}

}  // namespace

SubgroupLattice finite_subgroups(const std::vector<Symbol>& quotient, const Integer& bound, std::size_t limit) {
  if (bound < 1) throw InputError("subgroup bound must be positive");
  FiniteModel g;
  for (auto& s : quotient) {
    if (s.kind == Piece::zero) continue;
    if (s.kind != Piece::prufer && s.kind != Piece::cyclic) throw InputError("D/C summands must be torsion");
    if (s.p == 0) throw InputError("generic prime in a finite model");
    int k = 0;
    Integer pk = s.p;
    while (pk <= bound) {
      ++k;
      pk *= s.p;
    }
    int e = s.kind == Piece::prufer ? k : std::min(s.a, k);
    if (e == 0) continue;
    g.primes.push_back(s.p);
    g.exps.push_back(e);
    Integer r = ipow(s.p, e);
    if (r > Integer(limit)) throw BoundError("finite model exceeds enumeration limit");
    g.radix.push_back(r.convert_to<std::uint32_t>());
    g.size *= std::size_t(g.radix.back());
    if (g.size > limit) throw BoundError("finite model of D/C exceeds enumeration limit " + std::to_string(limit));
  }

  using Sub = std::vector<std::size_t>;
  std::set<Sub> found{{0}};
  std::vector<Sub> queue{{0}};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Sub h = queue[qi];
    for (std::size_t x = 0; x < g.size; ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      // <H, x> = H + Z x
      std::set<std::size_t> gen(h.begin(), h.end());
      std::size_t mult = x;
      while (mult != 0) {
        std::vector<std::size_t> shifted;
        for (auto y : h) shifted.push_back(g.add(y, mult));
        gen.insert(shifted.begin(), shifted.end());
        mult = g.add(mult, x);
        if (Integer(gen.size()) > bound) break;
      }
      if (Integer(gen.size()) > bound) continue;
      Sub s(gen.begin(), gen.end());
      if (found.insert(s).second) queue.push_back(s);
    }
  }
  std::vector<Sub> subs(found.begin(), found.end());
  std::stable_sort(subs.begin(), subs.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
  SubgroupLattice out;
  for (auto& s : subs) {
    out.groups.push_back(iso_type(g, s));
    out.orders.push_back(Integer(s.size()));
  }
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j)
      if (i != j && subs[i].size() < subs[j].size() &&
          std::includes(subs[j].begin(), subs[j].end(), subs[i].begin(), subs[i].end()))
        out.contained.emplace_back(int(i), int(j));
  return out;
}

// ---- Proposition 3 construction

std::string FactorDescriptor::str() const {
  if (solenoid) return "solenoid (Delta[" + row.str() + "] x R)/Z(1,1)";
  return "circle R/Z with subgroup (1/" + order.str() + ")Z/Z";
}

std::vector<FactorDescriptor> factorable_construction(const StdRep& s) {
  std::vector<FactorDescriptor> out;
  for (auto& r : s.rows) {
    FactorDescriptor f;
    f.row = r;
    f.solenoid = infinite_row(r);
    if (!f.solenoid) f.order = r.value();
    out.push_back(f);
  }
  return out;
}

AcdReport acd_flag(const ProtorusDescriptor& g) {
  AcdReport rep;
  rep.flag = g.split.reduced.rank() == g.dim_nA;
  if (!rep.flag) return rep;
  std::map<Prime, Exponent> top;
  for (auto& r : g.delta_star.rows)
    for (auto& [p, e] : r.exceptions())
      if (e != kInf) top[p] = std::max(top[p], e);
  for (auto& [p, e] : top) rep.scale *= ipow(p, e);
  rep.witness = factorable_construction(scale(g.delta_star, rep.scale));
  return rep;
}

// ---- lifting a dual morphism at a truncation

LiftReport lift_morphism(const QMat& a, const GroupDescription& x, const GroupDescription& y, Prime p, int N,
                         int bound) {
  if (N > bound) throw BoundError("truncation depth " + std::to_string(N) + " exceeds bound " + std::to_string(bound));
  if (auto bad = hom_counterexample(a, x, y))
    throw InputError("matrix does not map X into Y; " + to_string(*bad) + " goes outside");
  const int n = x.rank(), m = y.rank();
  LiftReport rep;
  rep.real_block = a;
  rep.p = p;
  rep.N = N;
  rep.target = hnf_basis(stack(QMat(QMat::Identity(m, m)), QMat(a.transpose())));
  Truncation dom = truncation(x, Lattice::standard(n), p, N);
  Truncation cod = truncation(y, rep.target, p, N);
  rep.domain_orders = dom.b;
  rep.codomain_orders = cod.b;
  const std::size_t kd = dom.b.size(), kc = cod.b.size();

  auto image = [&](const QVec& v) { return QVec(v * a.transpose()); };
  rep.block = ZMat::Zero(Eigen::Index(kd), Eigen::Index(kc));
  rep.lands_in_codomain = true;
  for (std::size_t k = 0; k < kd; ++k) {
    QVec w = image(dom.gens[k]);
    if (!member(y, w)) rep.lands_in_codomain = false;
    auto c = cod.coords(w);
    for (std::size_t j = 0; j < kc; ++j) rep.block(Eigen::Index(k), Eigen::Index(j)) = c[j];
  }

  // |image| = |codomain| / [Z^kc : rowspan(block) + ⊕ p^{b_j} Z]
  Integer cod_order = cod.order(), dom_order = dom.order();
  if (kc == 0) {
    rep.image_order = 1;
  } else {
    ZMat rel(Eigen::Index(kd + kc), Eigen::Index(kc));
    rel.setZero();
    if (kd) rel.topRows(Eigen::Index(kd)) = rep.block;
    for (std::size_t j = 0; j < kc; ++j) rel(Eigen::Index(kd + j), Eigen::Index(j)) = cod.modulus(j);
    ZMat h = hermite(rel);
    Integer det = 1;
    for (Eigen::Index i = 0; i < h.rows(); ++i) det *= h(i, i);
    rep.image_order = cod_order / det;
  }
  rep.kernel_order = dom_order / rep.image_order;
  rep.cokernel_order = cod_order / rep.image_order;

  // both routes around the square: rational map then coordinates, or coordinates then block
  auto check = [&](const std::vector<Integer>& c) {
    auto r1 = cod.coords(image(dom.element(c)));
    for (std::size_t j = 0; j < kc; ++j) {
      Integer r2 = 0;
      for (std::size_t k = 0; k < kd; ++k) r2 += c[k] * rep.block(Eigen::Index(k), Eigen::Index(j));
      if (floor_mod(r2, cod.modulus(j)) != r1[j]) return false;
    }
    return true;
  };
  rep.certificate = true;
  constexpr std::size_t kExhaustive = 1 << 12, kSamples = 512;
  if (dom_order <= Integer(kExhaustive)) {
    rep.exhaustive = true;
    std::size_t total = dom_order.convert_to<std::size_t>();
    std::vector<Integer> c(kd, Integer(0));
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      for (std::size_t k = 0; k < kd; ++k) {
        std::size_t mk = dom.modulus(k).convert_to<std::size_t>();
        c[k] = Integer(rest % mk);
        rest /= mk;
      }
      ++rep.checked;
      if (!check(c)) {
        rep.certificate = false;
        break;
      }
    }
  } else {
    std::mt19937_64 rng(0);
    std::vector<Integer> c(kd);
    for (std::size_t t = 0; t < kSamples && rep.certificate; ++t) {
      for (std::size_t k = 0; k < kd; ++k) c[k] = Integer(rng()) % dom.modulus(k);
      ++rep.checked;
      rep.certificate = check(c);
    }
  }
  return rep;
}

}  // namespace protori
