#include "protori/report.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "protori/errors.hpp"
#include "protori/local.hpp"
#include "protori/oracle.hpp"
#include "protori/sampling.hpp"

namespace protori::report {

namespace {

Json lines_of(const std::string& text) {
  Json out = Json::array();
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

Json rows_of(const StdRep& s) {
  Json out = Json::array();
  for (auto& r : s.rows) out.push_back(r.str());
  return out;
}

std::string prime_label(Prime p) { return p == 0 ? "other" : std::to_string(p); }

std::string matrix_str(const ZMat& m) {
  std::string s;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) s += ";";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += to_string(m(i, j));
    }
  }
  return s.empty() ? "[]" : s;
}

std::string orders_str(Prime p, const std::vector<int>& b) {
  if (b.empty()) return "0";
  std::string s;
  for (int e : b) s += (s.empty() ? "" : " ") + std::to_string(p) + "^" + std::to_string(e);
  return s;
}

}  // namespace

Json analyze(const GroupDescription& x) {
  ProtorusDescriptor g = from_dual(x);
  Json j;
  j["command"] = "analyze";
  j["group"] = lines_of(x.str());
  j["dim"] = g.dim;
  j["dim_nA"] = g.dim_nA;
  j["width_nA"] = width_nA(g.delta_star);
  j["chain"] = chain_holds(g);
  j["split"] = {{"r", g.split.r}, {"k", g.split.k}, {"reduced_rank", g.split.reduced.rank()}};
  j["delta_star"] = rows_of(g.delta_star);
  Supernatural m = sup_heights(x);
  j["tau_sup"] = tau_sup(x).str();

  if (g.split.r > 0) {
    j["hull"] = {{"skipped", "torus factor present (r = " + std::to_string(g.split.r) + ")"}};
  } else {
    HullExponents h = universal_resolution(g);
    Json per = Json::array();
    for (auto& [p, rs] : h.at) per.push_back({{"prime", std::to_string(p)}, {"r", rs.first}, {"s", rs.second}});
    Json act = Json::array();
    for (auto& [p, c] : h.activated_zero_rows) act.push_back({{"prime", std::to_string(p)}, {"rows", c}});
    j["hull"] = {{"primes", per},
                 {"other_primes", {{"r", h.generic.first}, {"s", h.generic.second}}},
                 {"activated_zero_rows", act},
                 {"torsion", torsion_str(torsion_part(h))}};
  }

  PeriodicEnvelope env = periodic_envelope(g.delta_star, m);
  Json rows = Json::array();
  for (auto& e : env.entries)
    rows.push_back({{"prime", prime_label(e.p)},
                    {"row", e.row},
                    {"s", ex_str(e.s)},
                    {"m", ex_str(e.m)},
                    {"case", e.table_case},
                    {"D", e.D.str()},
                    {"C", e.C.str()},
                    {"D/C", e.quotient.str()}});
  std::string quot;
  for (auto& s : env.quotient()) quot += (quot.empty() ? "" : " + ") + s.str();
  j["envelope"] = {{"m", m.str()}, {"rows", rows}, {"quotient", quot.empty() ? "0" : quot}};

  AcdReport acd = acd_flag(g);
  j["flags"] = {{"acd", acd.flag}, {"torus_free", g.split.r == 0}};
  if (acd.flag) {
    Json wit = Json::array();
    for (auto& f : acd.witness) wit.push_back(f.str());
    j["acd_witness"] = {{"scale", to_string(acd.scale)}, {"factors", wit}};
  }
  return j;
}

Json isogeny(const GroupDescription& a, const GroupDescription& b) {
  if (a.rank() != b.rank())
    throw InputError("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  const int n = a.rank();
  Json j;
  j["command"] = "isogeny";
  j["rank"] = n;
  auto ab = scaling_into(a, b), ba = scaling_into(b, a);
  auto wit = [&](const std::optional<Integer>& k) -> Json {
    if (!k) return "none";
    Integer idx = 1;
    for (int i = 0; i < n; ++i) idx *= *k;
    return {{"scale", to_string(*k)}, {"lattice_index", to_string(idx)}};
  };
  std::string verdict;
  if (n == 1) {
    TypeClass ta = rank1_type(a), tb = rank1_type(b);
    j["method"] = "type";
    j["type_a"] = ta.str();
    j["type_b"] = tb.str();
    verdict = ta == tb ? "isogenous" : "not isogenous";
  } else {
    StdRep da = from_dual(a).delta_star, db = from_dual(b).delta_star;
    bool prof = profinite_isogenous(da, db);
    j["method"] = "commensurability";
    j["delta_star_a"] = rows_of(da);
    j["delta_star_b"] = rows_of(db);
    j["dim_nA"] = {dim_nA(da), dim_nA(db)};
    j["profinite_isogenous"] = prof;
    if (ab && ba)
      verdict = "isogenous";
    else if (!prof)
      verdict = "not isogenous";
    else
      verdict = "inconclusive";
  }
  j["verdict"] = verdict;
  j["witness_a_into_b"] = wit(ab);
  j["witness_b_into_a"] = wit(ba);
  return j;
}

Json hull(const GroupDescription& x, HullMode mode, std::optional<LineScope> scope) {
  LineScope sc = scope.value_or(LineScope::saturated);
  GroupDescription y = qd_hull(x, mode, sc);
  Activity act = active_primes(x, mode);
  Json j;
  j["command"] = "hull";
  j["mode"] = mode == HullMode::inf ? "inf" : "fininf";
  j["scope"] = sc == LineScope::saturated ? "saturated" : "directives";
  j["group"] = lines_of(x.str());
  Json ps = Json::array();
  for (Prime p : act.primes) ps.push_back(std::to_string(p));
  j["active_primes"] = ps;
  j["active_generic"] = act.generic;
  j["hull"] = lines_of(y.str());
  if (!scope) {
    GroupDescription z = qd_hull(x, mode, LineScope::directives);
    bool differ = !same_group(y, z);
    j["scopes_differ"] = differ;
    if (differ) j["directives_hull"] = lines_of(z.str());
  }
  return j;
}

Json lift(const QMat& a, const GroupDescription& x, const GroupDescription& y, const LiftConfig& cfg) {
  if (a.rows() != y.rank() || a.cols() != x.rank())
    throw InputError("matrix must be " + std::to_string(y.rank()) + "x" + std::to_string(x.rank()));
  std::vector<Prime> primes;
  if (cfg.prime) {
    if (!is_prime(*cfg.prime)) throw InputError(std::to_string(*cfg.prime) + " is not prime");
    primes.push_back(*cfg.prime);
  } else {
    std::set<Prime> s;
    for (Prime p : special_primes(x)) s.insert(p);
    for (Prime p : special_primes(y)) s.insert(p);
    for (Prime p : prime_factors(denominator_lcm(a))) s.insert(p);
    primes.assign(s.begin(), s.end());
    if (primes.empty()) primes.push_back(2);
  }
  Json j;
  j["command"] = "lift";
  j["domain"] = lines_of(x.str());
  j["codomain"] = lines_of(y.str());
  j["real_block"] = to_string(a);
  j["depth"] = cfg.depth;
  Json blocks = Json::array();
  bool pass = true;
  for (Prime p : primes) {
    LiftReport r = lift_morphism(a, x, y, p, cfg.depth);
    pass = pass && r.certificate && r.lands_in_codomain;
    blocks.push_back({{"prime", std::to_string(p)},
                      {"target_lattice", to_string(r.target.basis())},
                      {"domain", orders_str(p, r.domain_orders)},
                      {"codomain", orders_str(p, r.codomain_orders)},
                      {"block", matrix_str(r.block)},
                      {"image_order", to_string(r.image_order)},
                      {"kernel_order", to_string(r.kernel_order)},
                      {"cokernel_order", to_string(r.cokernel_order)},
                      {"certificate", r.certificate ? "PASS" : "FAIL"},
                      {"checked", r.checked},
                      {"exhaustive", r.exhaustive}});
  }
  j["profinite_blocks"] = blocks;
  j["pass"] = pass;
  return j;
}

namespace {

// largest depth ≤ want with p^(depth·width) ≤ cap
int fit_depth(Prime p, int width, int want, std::uint64_t cap) {
  int d = 0;
  while (d < want) {
    long double size = 1;
    for (int i = 0; i < (d + 1) * std::max(width, 1); ++i) size *= (long double)p;
    if (size > (long double)cap) break;
    ++d;
  }
  return d;
}

struct Battery {
  std::string group_text;
  std::uint64_t seed;
  std::vector<oracle::CheckLine> lines;

  void add(const std::string& name, const std::string& instance, bool pass, const std::string& witness) {
    lines.push_back({name, oracle::instance_hash(group_text + "|" + std::to_string(seed) + "|" + instance), pass,
                     witness});
  }
};

}  // namespace

Json verify(const GroupDescription& x, const VerifyConfig& cfg) {
  if (cfg.depth < 1 || cfg.depth > kDepthBound)
    throw BoundError("depth " + std::to_string(cfg.depth) + " outside 1.." + std::to_string(kDepthBound));
  if (cfg.trials < 0) throw InputError("trials must be nonnegative");
  const int n = x.rank();
  const int N = cfg.depth;
  Rng rng(cfg.seed);
  Battery bat{x.str(), cfg.seed, {}};
  std::vector<Prime> special = special_primes(x);
  std::vector<Prime> probe = special;
  {
    Prime g = 2;
    while (std::binary_search(special.begin(), special.end(), g)) g = next_prime(g);
    probe.push_back(g);
  }

  // membership
  {
    std::vector<Prime> dens = special;
    dens.push_back(2);
    dens.push_back(3);
    int agree = 0;
    std::string bad;
    for (int t = 0; t < cfg.trials; ++t) {
      QVec q = t % 2 ? random_vector(rng, n, dens, 64) : random_member(rng, x);
      if (member(x, q) == oracle::member(x, q))
        ++agree;
      else if (bad.empty())
        bad = to_string(q);
    }
    bat.add("member", "trials=" + std::to_string(cfg.trials), bad.empty(),
            bad.empty() ? std::to_string(agree) + "/" + std::to_string(cfg.trials) : "q=" + bad);
  }

  // heights against depth-N saturation
  for (Prime p : probe) {
    std::string bad;
    int count = 0;
    for (int t = 0; t < std::max(1, cfg.trials / 5); ++t) {
      QVec z = random_member(rng, x);
      if (z.isZero()) continue;
      Exponent h = p_height(x, p, z);
      oracle::Height o = oracle::height(x, p, z, N);
      bool ok = (h == kInf || h >= N) ? o.saturated : (!o.saturated && o.value == h);
      ++count;
      if (!ok && bad.empty())
        bad = "z=" + to_string(z) + " symbolic=" + ex_str(h) + " oracle=" + std::to_string(o.value) +
              (o.saturated ? "+" : "");
    }
    bat.add("height", "p=" + std::to_string(p), bad.empty(),
            bad.empty() ? "p=" + std::to_string(p) + " instances=" + std::to_string(count) : bad);
  }

  // exactness of the truncated sequence and torsion order at each special prime
  StdRep ds = from_dual(x).delta_star;
  for (Prime p : special) {
    int d = fit_depth(p, int(ds.rows.size()), N, std::uint64_t(1) << 20);
    if (d == 0) {
      bat.add("exactness", "p=" + std::to_string(p), true, "skipped: p^m beyond enumeration ceiling");
    } else {
      oracle::Exactness e = oracle::exactness(ds, p, d);
      bool ok = e.exact && e.middle == e.sub * e.quotient;
      bat.add("exactness", "p=" + std::to_string(p) + " N=" + std::to_string(d), ok,
              "N=" + std::to_string(d) + " |middle|=" + to_string(e.middle) + " |sub|=" + to_string(e.sub) +
                  " |quotient|=" + to_string(e.quotient));
    }
    int dt = fit_depth(p, n, N, std::uint64_t(1) << 16);
    if (dt == 0) {
      bat.add("torsion", "p=" + std::to_string(p), true, "skipped: p^n beyond enumeration ceiling");
    } else {
      Integer sym = truncation(x, Lattice::standard(n), p, dt).order();
      Integer brute = oracle::torsion_count(x, p, dt);
      bat.add("torsion", "p=" + std::to_string(p) + " N=" + std::to_string(dt), sym == brute,
              "N=" + std::to_string(dt) + " symbolic=" + to_string(sym) + " oracle=" + to_string(brute));
    }
  }

  // quotient-divisible hulls, both modes
  for (HullMode mode : {HullMode::inf, HullMode::fininf}) {
    std::string tag = mode == HullMode::inf ? "inf" : "fininf";
    GroupDescription y = qd_hull(x, mode, LineScope::saturated);
    bool ext = hom_check(QMat::Identity(n, n), x, y);
    bat.add("hull_extensive", "mode=" + tag, ext, ext ? "X in hull" : "X not contained in hull");
    for (Prime p : active_primes(x, mode).primes) {
      int d = std::min(N, 6);
      bool ok = oracle::divisible(y, p, d);
      bat.add("hull_divisible", "mode=" + tag + " p=" + std::to_string(p), ok,
              "mode=" + tag + " p=" + std::to_string(p) + " N=" + std::to_string(d));
    }
    if (mode == HullMode::inf) {
      bool idem = same_group(qd_hull(y, mode, LineScope::saturated), y);
      bat.add("hull_idempotent", "mode=" + tag, idem, idem ? "hull(hull) = hull" : "hull grew on reapplication");
    }
  }

  // lattice laws
  {
    oracle::Report laws = oracle::lattice_laws(cfg.seed, std::max(2, cfg.trials), std::min(3, std::max(1, n)));
    for (auto& l : laws.lines) bat.lines.push_back(l);
  }

  // chain invariant
  {
    ProtorusDescriptor g = from_dual(x);
    bat.add("chain", "dim", chain_holds(g),
            "dim_nA=" + std::to_string(g.dim_nA) + " width_nA=" + std::to_string(width_nA(g.delta_star)) +
                " dim=" + std::to_string(g.dim));
  }

  Json j;
  j["command"] = "verify";
  j["seed"] = cfg.seed;
  j["depth"] = cfg.depth;
  j["trials"] = cfg.trials;
  j["group"] = lines_of(x.str());
  Json checks = Json::array();
  int passes = 0;
  for (auto& l : bat.lines) {
    checks.push_back(l.str());
    passes += l.pass;
  }
  j["checks"] = checks;
  j["summary"] = std::to_string(passes) + "/" + std::to_string(bat.lines.size()) + " PASS";
  j["pass"] = passes == int(bat.lines.size());
  return j;
}

bool passed(const Json& j) { return !j.contains("pass") || j["pass"].get<bool>(); }

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_text(const Json& j, int indent, std::string& out) {
  std::string pad(std::size_t(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out += pad + it.key() + ":\n";
      render_text(v, indent + 2, out);
    } else if (v.is_array()) {
      if (v.empty()) {
        out += pad + it.key() + ": []\n";
        continue;
      }
      bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_structured(); });
      if (flat && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_number(); })) {
        std::string s;
        for (auto& e : v) s += (s.empty() ? "" : " ") + scalar(e);
        out += pad + it.key() + ": " + s + "\n";
        continue;
      }
      out += pad + it.key() + ":\n";
      for (auto& e : v) {
        if (e.is_object()) {
          out += pad + "  -\n";
          render_text(e, indent + 4, out);
        } else {
          out += pad + "  " + scalar(e) + "\n";
        }
      }
    } else {
      out += pad + it.key() + ": " + scalar(v) + "\n";
    }
  }
}

}  // namespace

std::string render(const Json& j, Format f) {
  if (f == Format::structured) return j.dump(2) + "\n";
  std::string out;
  render_text(j, 0, out);
  return out;
}

}  // namespace protori::report
