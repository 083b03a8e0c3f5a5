#include "protori/profinite.hpp"

#include <algorithm>
#include <sstream>

#include "protori/errors.hpp"

namespace protori {

std::string StdRep::str() const {
  std::string s = std::to_string(rows.size()) + "\n";
  for (auto& r : rows) s += r.str() + "\n";
  return s;
}

FiniteAbelian::FiniteAbelian(std::vector<std::pair<Prime, int>> factors) {
  for (auto& f : factors)
    if (f.second > 0) f_.push_back(f);
  std::sort(f_.begin(), f_.end(), [](auto& a, auto& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
}

Integer FiniteAbelian::order() const {
  Integer o = 1;
  for (auto& [p, k] : f_) o *= ipow(p, k);
  return o;
}

std::string FiniteAbelian::str() const {
  if (f_.empty()) return "0";
  std::string s;
  for (auto& [p, k] : f_) {
    if (!s.empty()) s += " ";
    s += std::to_string(p) + "^" + std::to_string(k);
  }
  return s;
}

std::vector<Prime> support(const StdRep& s) {
  std::vector<Prime> ps;
  for (auto& r : s.rows)
    for (auto& kv : r.exceptions()) ps.push_back(kv.first);
  sort_unique(ps);
  return ps;
}

StdRep std_rep(std::vector<Supernatural> raw) {
  // default-∞ rows go first so the generic primes are sorted too
  std::stable_sort(raw.begin(), raw.end(), [](auto& a, auto& b) { return a.default_inf() > b.default_inf(); });
  StdRep tmp{raw};
  const auto primes = support(tmp);
  std::vector<std::map<Prime, Exponent>> exc(raw.size());
  for (Prime p : primes) {
    std::vector<Exponent> col;
    for (auto& r : raw) col.push_back(r.at(p));
    std::sort(col.begin(), col.end(), std::greater<>());
    for (std::size_t j = 0; j < raw.size(); ++j) exc[j][p] = col[j];
  }
  StdRep out;
  for (std::size_t j = 0; j < raw.size(); ++j) out.rows.emplace_back(std::move(exc[j]), raw[j].default_inf());
  while (!out.rows.empty() && out.rows.back().is_one()) out.rows.pop_back();
  return out;
}

int width_nA(const StdRep& s) { return s.width(); }

bool infinite_row(const Supernatural& row) {
  if (row.default_inf()) return true;  // infinitely many nontrivial factors
  return row.has_infinite();
}

int dim_nA(const StdRep& s) {
  return int(std::count_if(s.rows.begin(), s.rows.end(), infinite_row));
}

bool profinite_isogenous(const StdRep& a, const StdRep& b) {
  if (dim_nA(a) != dim_nA(b)) return false;
  // infinite rows form a prefix of a canonical rep
  for (int j = 0; j < dim_nA(a); ++j)
    if (!sn_equivalent(a.rows[std::size_t(j)], b.rows[std::size_t(j)])) return false;
  return true;
}

FiniteAbelian truncate(const StdRep& s, Prime p, int N, int bound) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (N < 1) throw InputError("truncation depth must be positive");
  if (N > bound) throw BoundError("truncation depth " + std::to_string(N) + " exceeds bound " + std::to_string(bound));
  std::vector<std::pair<Prime, int>> f;
  for (auto& r : s.rows) f.emplace_back(p, int(std::min<Exponent>(r.at(p), N)));
  return FiniteAbelian(std::move(f));
}

FiniteAbelian mu_kernel(const StdRep& s, const Integer& n) {
  if (n == 0) throw InputError("mu_kernel of multiplication by zero");
  std::vector<std::pair<Prime, int>> f;
  for (Prime p : prime_factors(n)) {
    Exponent v = valuation(n, p);
    for (auto& r : s.rows) {
      Exponent e = r.at(p);
      if (e != kInf) f.emplace_back(p, int(std::min(v, e)));
    }
  }
  return FiniteAbelian(std::move(f));
}

StdRep projective_kernel(const StdRep& s) {
  std::vector<Supernatural> rows;
  for (auto& r : s.rows) {
    std::map<Prime, Exponent> m;
    for (auto& [p, e] : r.exceptions()) m[p] = e == kInf ? 0 : kInf;
    rows.emplace_back(std::move(m), !r.default_inf());
  }
  return std_rep(std::move(rows));
}

StdRep scale(const StdRep& s, const Integer& n) {
  if (n <= 0) throw InputError("scale by a non-positive integer");
  auto ps = n == 1 ? std::vector<Prime>{} : prime_factors(n);
  std::vector<Supernatural> rows;
  for (auto& r : s.rows) {
    std::map<Prime, Exponent> m = r.exceptions();
    for (Prime p : ps) {
      Exponent e = r.at(p);
      if (e != kInf) m[p] = std::max<Exponent>(e - valuation(n, p), 0);
    }
    rows.emplace_back(std::move(m), r.default_inf());
  }
  return std_rep(std::move(rows));
}

StdRep parse_std_rep(const std::string& text) {
  std::vector<Supernatural> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line, ';'))
    if (line.find_first_not_of(" \t") != std::string::npos) rows.push_back(parse_supernatural(line));
  return std_rep(std::move(rows));
}

}  // namespace protori
