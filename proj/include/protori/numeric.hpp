#pragma once
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/traits/is_byte_container.hpp>
#include <Eigen/Core>

// Eigen 3.4 expressions carry a const_iterator typedef, and boost then tries to
// treat them as byte containers while probing scalar conversions.
namespace boost::multiprecision::detail {
template <class C>
  requires std::is_base_of_v<Eigen::EigenBase<C>, C>
struct is_byte_container_imp<C, true> : std::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

namespace protori {

namespace mp = boost::multiprecision;
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Prime = std::uint64_t;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
// vectors are rows throughout; a lattice basis is a stack of them
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using QMat = Mat<Rational>;
using ZMat = Mat<Integer>;
using QVec = Vec<Rational>;
using ZVec = Vec<Integer>;

// exponents of supernatural numbers and heights
using Exponent = long long;
inline constexpr Exponent kInf = std::numeric_limits<Exponent>::max();

inline Exponent ex_add(Exponent a, Exponent b) {
  return (a == kInf || b == kInf) ? kInf : a + b;
}
std::string ex_str(Exponent e);

// ---- number theory

bool is_prime(Prime p);
Prime next_prime(Prime p);

// Trial-division ceiling used by prime_factors; scoped per thread.
Prime prime_bound();
class PrimeBoundScope {
 public:
  explicit PrimeBoundScope(Prime bound);
  ~PrimeBoundScope();
  PrimeBoundScope(const PrimeBoundScope&) = delete;
  PrimeBoundScope& operator=(const PrimeBoundScope&) = delete;

 private:
  Prime saved_;
};

// distinct primes of |n|, ascending; n != 0
std::vector<Prime> prime_factors(const Integer& n);

Exponent valuation(const Integer& n, Prime p);  // kInf at 0
Exponent valuation(const Rational& q, Prime p);
Integer ipow(Prime p, Exponent e);
Integer num(const Rational& q);
Integer den(const Rational& q);
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);
Integer mod_inverse(const Integer& a, const Integer& m);
bool p_integral(const Rational& q, Prime p);
bool is_integral(const QVec& v);

Integer denominator_lcm(const QMat& m);
Integer denominator_lcm(const QVec& v);
void collect_primes(const Integer& n, std::vector<Prime>& out);
void sort_unique(std::vector<Prime>& ps);

// ---- exact linear algebra over Q

QMat to_rational(const ZMat& m);
ZMat to_integer(const QMat& m);  // entries must be integral

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(QMat& m);
int rank(const QMat& m);
QMat inverse(const QMat& m);  // throws InputError when singular
Rational determinant(const QMat& m);
// columns spanning {c : m c = 0}, integral and primitive, deterministic
QMat right_kernel(const QMat& m, int cols);
// rows spanning the row space, after rref
QMat row_basis(const QMat& m);
bool in_row_span(const QMat& rows, const QVec& x);
QVec zero_vec(int n);
QVec unit_vec(int n, int j);
QMat stack(const QMat& top, const QMat& bottom);
QMat stack(const std::vector<QVec>& rows, int cols);

// ---- text

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);
std::string to_string(const QVec& v);  // (a,b/c)
std::string to_string(const ZVec& v);
std::string to_string(const QMat& m);  // rows separated by ';'
Rational parse_rational(const std::string& s);  // throws InputError
QMat parse_matrix(const std::string& s);        // "1,0;0,1"

}  // namespace protori
