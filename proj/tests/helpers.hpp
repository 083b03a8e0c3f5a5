#pragma once
#include <string>

#include "protori/group.hpp"
#include "protori/lattice.hpp"
#include "protori/profinite.hpp"
#include "protori/supernatural.hpp"

namespace protori::test {

inline GroupDescription G(const std::string& text) { return parse_group(text); }
inline QVec V(const std::string& text) { return parse_matrix(text).row(0); }
inline QMat M(const std::string& text) { return parse_matrix(text); }
inline Supernatural S(const std::string& text) { return parse_supernatural(text); }
inline StdRep R(const std::string& text) { return parse_std_rep(text); }
inline Lattice L(const std::string& text) { return hnf_basis(parse_matrix(text)); }

// a few groups that keep coming back
inline const char* kZ = "rank 1";
inline const char* kZhalf = "rank 1; dir v=(1) s=2^inf";
inline const char* kZthird = "rank 1; dir v=(1) s=3^inf";
inline const char* kZsixth = "rank 1; dir v=(1) s=2^inf*3^inf";
inline const char* kQuarter = "rank 1; dir v=(1/4)";
inline const char* kHalfDiag = "rank 2; dir v=(1/2,1/2)";
inline const char* kQ = "rank 1; dir v=(1) s=1 default inf";

}  // namespace protori::test
