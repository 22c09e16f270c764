#pragma once

#include <cstdlib>
#include <string>

#include <Eigen/Core>
#include <gmpxx.h>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace augberg {

/// Arbitrary-precision integer used for all exact linear algebra.
using Integer = mpz_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

// Scalar helpers shared by the templated algorithms. C++ semantics for / and %
// (truncation toward zero) hold for both builtin integers and mpz_class.

inline Integer abs_value(const Integer& a) { return abs(a); }
inline long long abs_value(long long a) { return a < 0 ? -a : a; }
inline long abs_value(long a) { return a < 0 ? -a : a; }
inline int abs_value(int a) { return a < 0 ? -a : a; }

inline std::string to_string(const Integer& a) { return a.get_str(); }

/// Extended Euclid: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
template <typename Scalar>
Scalar extended_gcd(const Scalar& a, const Scalar& b, Scalar& s, Scalar& t) {
  Scalar old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    Scalar q = old_r / r;
    Scalar tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

}  // namespace augberg
