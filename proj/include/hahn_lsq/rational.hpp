#pragma once

// Exact rational arithmetic for oracle checks with integer parameters.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace hahn_lsq {

// Arbitrary-size numerator and positive denominator, kept in lowest terms.
using RationalScalar = boost::multiprecision::cpp_rational;
using BigInteger = boost::multiprecision::cpp_int;

inline RationalScalar rational_pochhammer(const RationalScalar& a, int k) {
  RationalScalar prod = 1;
  for (int i = 0; i < k; ++i) {
    prod *= a + i;
  }
  return prod;
}

inline BigInteger factorial(int n) {
  BigInteger f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= i;
  }
  return f;
}

// C(a + k, k) for integer a >= 0.
inline BigInteger integer_binomial(std::int64_t a, int k) {
  BigInteger num = 1;
  for (int i = 1; i <= k; ++i) {
    num *= a + i;
  }
  return num / factorial(k);
}

inline double to_double(const RationalScalar& r) { return r.convert_to<double>(); }

}  // namespace hahn_lsq
