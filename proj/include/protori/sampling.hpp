#pragma once
#include <random>
#include <vector>

#include "protori/group.hpp"
#include "protori/profinite.hpp"

namespace protori {

// Random directive groups in the desk-scale ranges used by the test batteries.
struct GroupShape {
  int min_rank = 1, max_rank = 3;
  int max_directives = 3;
  int max_denominator = 64;
  std::vector<Prime> primes{2, 3, 5, 7, 11, 13};
  int max_finite_exponent = 3;
};

using Rng = std::mt19937_64;

GroupDescription random_group(Rng& rng, const GroupShape& shape = {});
// Z^n part plus admissible multiples of each directive
QVec random_member(Rng& rng, const GroupDescription& x);
// arbitrary vector whose denominators are products of the given primes, at most max_den
QVec random_vector(Rng& rng, int n, const std::vector<Prime>& primes, int max_den);
// rows with exponents drawn from {0, 1, 2, ∞} at a few primes
StdRep random_std_rep(Rng& rng, int max_rows, const std::vector<Prime>& primes);
std::vector<Supernatural> random_raw_rows(Rng& rng, int max_rows, const std::vector<Prime>& primes);

}  // namespace protori
