#pragma once

#include <cmath>
#include <cstdint>

namespace hahn_lsq {

/// Natural log of the gamma function for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), by direct product so that a
/// vanishing factor gives an exact zero.
double pochhammer(double a, int k);

/// Logarithm of |(a)_k| together with its sign (+1, -1, or 0 for a zero factor).
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};
SignedLog log_pochhammer(double a, int k);

/// Generalized binomial C(a + k, k) = Gamma(a+k+1) / (Gamma(k+1) Gamma(a+1)),
/// a > -1, computed in log space.
double gen_binomial(double a, int k);
double log_gen_binomial(double a, int k);

/// Two-sided Stirling-type enclosure of 2^n n! / (2n)!.
///
/// All three quantities are kept as logarithms; for large n the values
/// themselves underflow a double.
struct StirlingSandwich {
  double log_lower = 0.0;
  double log_value = 0.0;
  double log_upper = 0.0;

  double lower() const { return std::exp(log_lower); }
  double value() const { return std::exp(log_value); }
  double upper() const { return std::exp(log_upper); }
  bool holds() const { return log_lower <= log_value && log_value <= log_upper; }
};
StirlingSandwich stirling_sandwich(int n);

/// N^{b-a} Gamma(N+a)/Gamma(N+b) - 1 - (a-b)(a+b-1)/(2N), i.e. what remains
/// after the first-order asymptotic expansion of the gamma ratio. O(N^-2).
double gamma_ratio_residual(double a, double b, std::int64_t N);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double result() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace hahn_lsq
