#include "hahn_lsq/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "hahn_lsq/errors.hpp"

namespace hahn_lsq {

namespace {

// Report domain problems through our own exceptions; never touch errno.
using GammaPolicy = boost::math::policies::policy<
    boost::math::policies::domain_error<boost::math::policies::throw_on_error>,
    boost::math::policies::pole_error<boost::math::policies::throw_on_error>,
    boost::math::policies::overflow_error<boost::math::policies::throw_on_error>,
    boost::math::policies::promote_double<false>>;

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: argument must be a positive finite real, got " + std::to_string(x));
  }
  return boost::math::lgamma(x, GammaPolicy());
}

double pochhammer(double a, int k) {
  if (k < 0) {
    throw DomainError("pochhammer: requires k >= 0");
  }
  double prod = 1.0;
  for (int i = 0; i < k; ++i) {
    prod *= a + i;
  }
  return prod;
}

SignedLog log_pochhammer(double a, int k) {
  if (k < 0) {
    throw DomainError("log_pochhammer: requires k >= 0");
  }
  if (k == 0) {
    return {0.0, 1};
  }
  if (a > 0.0) {
    return {log_gamma(a + k) - log_gamma(a), 1};
  }
  SignedLog out;
  for (int i = 0; i < k; ++i) {
    const double f = a + i;
    if (f == 0.0) {
      return {0.0, 0};
    }
    if (f < 0.0) {
      out.sign = -out.sign;
    }
    out.log_abs += std::log(std::abs(f));
  }
  return out;
}

double log_gen_binomial(double a, int k) {
  if (!(a > -1.0)) {
    throw DomainError("gen_binomial: requires a > -1, got " + std::to_string(a));
  }
  if (k < 0) {
    throw DomainError("gen_binomial: requires k >= 0");
  }
  if (k == 0) {
    return 0.0;
  }
  return log_gamma(a + k + 1.0) - log_gamma(k + 1.0) - log_gamma(a + 1.0);
}

double gen_binomial(double a, int k) { return std::exp(log_gen_binomial(a, k)); }

StirlingSandwich stirling_sandwich(int n) {
  if (n < 1) {
    throw DomainError("stirling_sandwich: requires n >= 1");
  }
  const double nn = n;
  const double log_value = nn * std::numbers::ln2 + log_gamma(nn + 1.0) - log_gamma(2.0 * nn + 1.0);
  // sqrt(pi n) / (2^n n!)
  const double log_base = 0.5 * std::log(std::numbers::pi * nn) - nn * std::numbers::ln2 - log_gamma(nn + 1.0);
  return {
      log_base + 2.0 / (12.0 * nn + 1.0) - 1.0 / (24.0 * nn),
      log_value,
      log_base + 1.0 / (6.0 * nn) - 1.0 / (24.0 * nn + 1.0),
  };
}

double gamma_ratio_residual(double a, double b, std::int64_t N) {
  if (!(a > 0.0) || !(b > 0.0) || N < 1) {
    throw DomainError("gamma_ratio_residual: requires a, b > 0 and N >= 1");
  }
  const double n = static_cast<double>(N);
  // tgamma_delta_ratio(z, d) = Gamma(z) / Gamma(z + d), accurate for large z.
  const double ratio = boost::math::tgamma_delta_ratio(n + a, b - a, GammaPolicy());
  const double ratio_minus_one = std::expm1((b - a) * std::log(n) + std::log(ratio));
  return ratio_minus_one - (a - b) * (a + b - 1.0) / (2.0 * n);
}

}  // namespace hahn_lsq
