#pragma once

// Internal: terminating hypergeometric-type sums whose terms alternate and
// cancel. Sum in double first; if the largest term says the double result is
// not trustworthy, redo it in 50 and then 100 significant digits.

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>

#include "hahn_lsq/specfun.hpp"

namespace hahn_lsq::detail {

inline constexpr double kSeriesTolerance = 1e-14;

inline bool series_trusted(double max_term, double sum, int terms, double unit_roundoff) {
  const double err = max_term * (4.0 * terms + 8.0) * unit_roundoff;
  return err <= kSeriesTolerance * std::max(std::abs(sum), 1.0);
}

// `ratio(k, Real)` returns term_{k+1} / term_k as a Real; term_0 = 1.
template <class Ratio>
double adaptive_series(int n, Ratio&& ratio) {
  {
    double term = 1.0;
    double max_term = 1.0;
    CompensatedSum sum;
    sum.add(1.0);
    for (int k = 0; k < n; ++k) {
      term *= ratio(k, double{});
      sum.add(term);
      max_term = std::max(max_term, std::abs(term));
    }
    const double s = sum.result();
    if (series_trusted(max_term, s, n, std::numeric_limits<double>::epsilon())) {
      return s;
    }
  }

  auto wide_pass = [&]<class Real>(Real, double unit_roundoff, bool& trusted) {
    Real term = 1;
    Real sum = 1;
    Real max_term = 1;
    for (int k = 0; k < n; ++k) {
      term *= ratio(k, Real{});
      sum += term;
      max_term = std::max(max_term, Real(abs(term)));
    }
    const double s = sum.template convert_to<double>();
    trusted = series_trusted(max_term.template convert_to<double>(), s, n, unit_roundoff);
    return s;
  };

  bool trusted = false;
  const double s50 = wide_pass(boost::multiprecision::cpp_bin_float_50{}, 1e-49, trusted);
  if (trusted) {
    return s50;
  }
  return wide_pass(boost::multiprecision::cpp_bin_float_100{}, 1e-99, trusted);
}

}  // namespace hahn_lsq::detail
