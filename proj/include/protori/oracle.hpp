#pragma once
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "protori/group.hpp"
#include "protori/profinite.hpp"

// Brute-force cross-checks. Nothing in here calls the Hermite/Smith code or the
// local splittings; the point is to disagree with them when they are wrong.
namespace protori::oracle {

inline constexpr std::uint64_t kCeiling = std::uint64_t(1) << 24;

struct TruncationContext {
  Prime p;
  int N;
  Integer modulus;  // p^N
  int rank;
};
TruncationContext context(Prime p, int N, int rank);  // throws BoundError past the ceiling

bool member(const GroupDescription& x, const QVec& q);
bool member_at(const GroupDescription& x, const QVec& q, Prime p);

struct Height {
  int value = 0;
  bool saturated = false;  // value == N and z/p^N still a member
};
Height height(const GroupDescription& x, Prime p, const QVec& z, int N);

struct Exactness {
  bool exact = false;
  Integer middle, sub, quotient;
};
Exactness exactness(const StdRep& s, Prime p, int N);

bool divisible(const GroupDescription& hull, Prime p, int N);

// |(X ∩ p^{-N}Z^n)/Z^n| by enumerating residues
Integer torsion_count(const GroupDescription& x, Prime p, int N);

// fraction-free determinant, no shared code with the symbolic side
Rational det(const QMat& m);
// x in the row lattice of b, by Cramer's rule
bool in_lattice(const QMat& b, const QVec& x);

struct CheckLine {
  std::string name, hash;
  bool pass = true;
  std::string witness;
  std::string str() const;
};
struct Report {
  std::vector<CheckLine> lines;
  bool all_pass() const;
  std::string str() const;
};

std::string instance_hash(std::string_view text);  // FNV-1a, 16 hex digits
Report lattice_laws(std::uint64_t seed, int trials, int max_rank = 3);

}  // namespace protori::oracle
