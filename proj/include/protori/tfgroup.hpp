#pragma once
#include <optional>

#include "protori/group.hpp"
#include "protori/lattice.hpp"
#include "protori/local.hpp"
#include "protori/profinite.hpp"
#include "protori/supernatural.hpp"

namespace protori {

bool member(const GroupDescription& x, const QVec& q);
Exponent p_height(const GroupDescription& x, Prime p, const QVec& z);
Supernatural height_seq(const GroupDescription& x, const QVec& z);

TypeClass rank1_type(const GroupDescription& x);
bool rank1_isomorphic(const GroupDescription& x, const GroupDescription& y);

// pointwise sup of heights over primitive points; ∞ wherever X_(p) has a divisible part
Supernatural sup_heights(const GroupDescription& x);
TypeClass tau_sup(const GroupDescription& x);

// standard representation of (X/F)^∨; F ⊆ X
StdRep quotient_structure(const GroupDescription& x, const Lattice& f);

// x ∈ X with A·x ∉ Y, or nothing when A·X ⊆ Y. A is m x n and acts on columns.
std::optional<QVec> hom_counterexample(const QMat& a, const GroupDescription& x, const GroupDescription& y);
bool hom_check(const QMat& a, const GroupDescription& x, const GroupDescription& y);
// A·X ⊆ Y judged at p alone (p generic allowed as 0)
bool hom_check_at(const QMat& a, const GroupDescription& x, const GroupDescription& y, Prime p);
// least k > 0 with k·X ⊆ Y, if any
std::optional<Integer> scaling_into(const GroupDescription& x, const GroupDescription& y);

// X ≅ Z^r ⊕ Q^k ⊕ reduced
struct Split {
  int r = 0, k = 0;
  GroupDescription reduced{0};
};
Split canonical_split(const GroupDescription& x);

}  // namespace protori
