#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "protori/group.hpp"
#include "protori/lattice.hpp"
#include "protori/profinite.hpp"
#include "protori/tfgroup.hpp"

namespace protori {

// A protorus G, carried by its dual X = G^∨ and the
// structure data read off it.
struct ProtorusDescriptor {
  GroupDescription dual{0};
  int dim = 0;
  StdRep delta_star;  // (X/Z^n)^∨
  int dim_nA = 0;
  Split split;
};

ProtorusDescriptor from_dual(const GroupDescription& x);
// dim_nA ≤ width_nA ≤ dim
bool chain_holds(const ProtorusDescriptor& g);

enum class HullMode { inf, fininf };
enum class LineScope { directives, saturated };

// primes at which a hull of the given mode promotes something
struct Activity {
  std::vector<Prime> primes;
  bool generic = false;
};
Activity active_primes(const GroupDescription& x, HullMode mode);

GroupDescription qd_hull(const GroupDescription& x, HullMode mode, LineScope scope);
// X ⊆ Y and Y ⊆ X as subsets of Q^n
bool same_group(const GroupDescription& x, const GroupDescription& y);

struct HullExponents {
  std::map<Prime, std::pair<int, int>> at;  // p -> (r_p, s_p), zero pairs omitted
  std::pair<int, int> generic{0, 0};        // every prime not listed
  // zero rows of Δ* at primes where X_∞ has unbounded height; reported only
  std::map<Prime, int> activated_zero_rows;
  std::pair<int, int> get(Prime p) const;
};
HullExponents universal_resolution(const ProtorusDescriptor& g);

// ⊕_p Z(p^∞)^{s_p}
std::vector<std::pair<Prime, int>> torsion_part(const HullExponents& h);
std::string torsion_str(const std::vector<std::pair<Prime, int>>& t);

enum class Piece { zero, qhat, zhat, prufer, cyclic };
struct Symbol {
  Piece kind = Piece::zero;
  Prime p = 0;  // 0: every prime outside the listed ones
  int a = 0;    // cyclic order p^a
  std::string str() const;
  bool operator==(const Symbol&) const = default;
};
Symbol cyclic(Prime p, Exponent a);

struct EnvelopeEntry {
  Prime p = 0;
  int row = 0;
  Exponent s = 0, m = 0;
  int table_case = 0;  // 1, 2, 3
  Symbol D, C, quotient;
};
struct PeriodicEnvelope {
  std::vector<EnvelopeEntry> entries;
  // nonzero summands of D/C
  std::vector<Symbol> quotient() const;
};
PeriodicEnvelope periodic_envelope(const StdRep& delta_star, const Supernatural& m);
EnvelopeEntry envelope_case(Prime p, Exponent s, Exponent m);

struct SubgroupLattice {
  std::vector<FiniteAbelian> groups;
  std::vector<Integer> orders;
  std::vector<std::pair<int, int>> contained;  // (i, j): groups[i] ⊊ groups[j]
};
inline constexpr std::size_t kEnumerationLimit = 1 << 14;
SubgroupLattice finite_subgroups(const std::vector<Symbol>& quotient, const Integer& bound,
                                 std::size_t limit = kEnumerationLimit);

struct FactorDescriptor {
  bool solenoid = false;
  Supernatural row;
  Integer order = 1;  // circle case: marked subgroup (1/order)Z/Z
  std::string str() const;
};
std::vector<FactorDescriptor> factorable_construction(const StdRep& s);

struct AcdReport {
  bool flag = false;
  Integer scale = 1;  // N with width_nA(NΔ) = dim_nA(NΔ)
  std::vector<FactorDescriptor> witness;
};
AcdReport acd_flag(const ProtorusDescriptor& g);

struct LiftReport {
  QMat real_block;
  Prime p = 0;
  int N = 0;
  Lattice target = Lattice::standard(0);  // Z^m + A·Z^n
  std::vector<int> domain_orders, codomain_orders;
  ZMat block;  // row k: image of the k-th domain generator in codomain coordinates
  Integer image_order = 1, kernel_order = 1, cokernel_order = 1;
  bool lands_in_codomain = false;
  bool certificate = false;
  bool exhaustive = false;
  std::size_t checked = 0;
};
LiftReport lift_morphism(const QMat& a, const GroupDescription& x, const GroupDescription& y, Prime p, int N,
                         int bound = kDepthBound);

}  // namespace protori
