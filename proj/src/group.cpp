#include "protori/group.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "protori/errors.hpp"
#include "protori/lattice.hpp"

namespace protori {

namespace {

std::vector<Integer> as_key(const ZVec& z) { return std::vector<Integer>(z.data(), z.data() + z.size()); }

}  // namespace

GroupDescription::GroupDescription(int rank, std::vector<Directive> dirs) : rank_(rank) {
  if (rank < 0) throw InputError("negative rank");
  using Key = std::tuple<std::vector<Integer>, std::string, std::string>;
  std::vector<std::pair<Key, Directive>> keyed;
  for (auto& d : dirs) {
    if (d.v.size() != rank) throw InputError("directive " + to_string(d.v) + " has wrong dimension");
    if (d.v.isZero()) throw InputError("zero directive vector");
    Key k{as_key(hemisphere_rep(d.v).coords), d.s.str(), to_string(d.v)};
    keyed.emplace_back(std::move(k), std::move(d));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](auto& a, auto& b) { return a.first < b.first; });
  for (auto& kd : keyed) dirs_.push_back(std::move(kd.second));
}

GroupDescription GroupDescription::with(Directive d) const {
  auto all = dirs_;
  all.push_back(std::move(d));
  return GroupDescription(rank_, std::move(all));
}

std::string GroupDescription::str() const {
  std::string s = "rank " + std::to_string(rank_) + "\n";
  for (auto& d : dirs_) s += "dir v=" + to_string(d.v) + " s=" + d.s.str() + "\n";
  return s;
}

namespace {

struct Line {
  std::string text;
  int number;
};

// newline or ';' ends a statement; '#' starts a comment
std::vector<std::pair<Line, int>> statements(std::string_view text) {
  std::vector<std::pair<Line, int>> out;
  int line = 1, col = 1, start_col = 1;
  std::string cur;
  bool comment = false;
  auto flush = [&] {
    out.push_back({{cur, line}, start_col});
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '\n') {
      flush();
      ++line;
      col = 1;
      start_col = 1;
      comment = false;
      continue;
    }
    if (!comment && ch == ';') {
      flush();
      start_col = col + 1;
    } else if (ch == '#') {
      comment = true;
    } else if (!comment) {
      cur += ch;
    }
    ++col;
  }
  flush();
  return out;
}

std::size_t skip_ws(const std::string& s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

}  // namespace

GroupDescription parse_group(std::string_view text) {
  int rank = -1;
  std::vector<Directive> dirs;
  for (auto& [ln, col0] : statements(text)) {
    const std::string& s = ln.text;
    auto fail = [&, col0 = col0, num = ln.number](const std::string& what, std::size_t at) -> void {
      throw ParseError(what, num, col0 + int(at));
    };
    std::size_t i = skip_ws(s, 0);
    if (i >= s.size()) continue;
    if (s.compare(i, 4, "rank") == 0) {
      if (rank >= 0) fail("duplicate rank line", i);
      std::size_t j = skip_ws(s, i + 4);
      std::size_t k = j;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k == j || k - j > 6) fail("expected a rank", j);
      if (skip_ws(s, k) != s.size()) fail("trailing text after rank", skip_ws(s, k));
      rank = std::stoi(s.substr(j, k - j));
      if (rank < 1) fail("rank must be at least 1", j);
      continue;
    }
    if (s.compare(i, 3, "dir") != 0) fail("expected 'rank' or 'dir'", i);
    if (rank < 0) fail("'dir' before 'rank'", i);
    i = skip_ws(s, i + 3);
    if (s.compare(i, 3, "v=(") != 0) fail("expected v=(...)", i);
    std::size_t open = i + 3, close = s.find(')', open);
    if (close == std::string::npos) fail("unclosed vector", i);
    std::vector<Rational> coords;
    std::size_t p = open;
    while (p <= close) {
      std::size_t q = s.find(',', p);
      if (q == std::string::npos || q > close) q = close;
      try {
        coords.push_back(parse_rational(s.substr(p, q - p)));
      } catch (const InputError& e) {
        fail(e.what(), p);
      }
      p = q + 1;
    }
    if (int(coords.size()) != rank) fail("vector has " + std::to_string(coords.size()) + " entries, rank is " + std::to_string(rank), open);
    QVec v(rank);
    for (int j = 0; j < rank; ++j) v(j) = coords[std::size_t(j)];
    if (v.isZero()) fail("zero directive vector", open);
    Supernatural sn;
    std::size_t t = skip_ws(s, close + 1);
    if (t < s.size()) {
      if (s.compare(t, 2, "s=") != 0) fail("expected s=<supernatural>", t);
      try {
        sn = parse_supernatural(std::string_view(s).substr(t + 2));
      } catch (const InputError& e) {
        fail(e.what(), t + 2);
      }
    }
    dirs.push_back({v, sn});
  }
  if (rank < 0) throw ParseError("missing rank line", 1, 1);
  return GroupDescription(rank, std::move(dirs));
}

}  // namespace protori
