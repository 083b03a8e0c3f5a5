#pragma once
#include <string>
#include <string_view>
#include <vector>

#include "protori/numeric.hpp"
#include "protori/supernatural.hpp"

namespace protori {

// One generator datum: adjoin A(s)·v, A(s) = {a/b : b | s}.
struct Directive {
  QVec v;
  Supernatural s;
};

// X = Z^n + Σ A(s_i)·v_i inside Q^n.
class GroupDescription {
 public:
  explicit GroupDescription(int rank, std::vector<Directive> dirs = {});

  int rank() const { return rank_; }
  const std::vector<Directive>& directives() const { return dirs_; }
  GroupDescription with(Directive d) const;
  // directives that actually enlarge Z^n
  bool active(const Directive& d) const { return !(d.s.is_one() && is_integral(d.v)); }

  // canonical text, directives sorted by line then supernatural
  std::string str() const;
  bool operator==(const GroupDescription& o) const { return str() == o.str(); }

 private:
  int rank_;
  std::vector<Directive> dirs_;
};

GroupDescription parse_group(std::string_view text);

}  // namespace protori
