#include "hahn_lsq/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hahn_lsq/errors.hpp"
#include "hahn_lsq/specfun.hpp"
#include "series.hpp"

namespace hahn_lsq {

JacobiParams::JacobiParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw ParameterError("JacobiParams: requires alpha > -1 and beta > -1, got alpha=" +
                         std::to_string(alpha) + " beta=" + std::to_string(beta));
  }
}

double JacobiParams::weight(double x) const {
  return std::pow(1.0 - x, alpha_) * std::pow(1.0 + x, beta_);
}

double jacobi_eval(int n, double x, const JacobiParams& params) {
  if (n < 0) {
    throw DegreeError("jacobi_eval: degree must be nonnegative");
  }
  const double a = params.alpha();
  const double b = params.beta();
  if (n == 0) {
    return 1.0;
  }
  double lead = 1.0;
  for (int i = 0; i < n; ++i) {
    lead *= (a + 1.0 + i) / (i + 1.0);
  }
  // term_{k+1}/term_k = (k-n)(n+a+b+1+k) y / ((a+1+k)(k+1)),  y = (1-x)/2
  const double series = detail::adaptive_series(n, [&](int k, auto zero) {
    using Real = decltype(zero);
    const Real y = (Real(1) - Real(x)) / 2;
    Real num = Real(k - n) * (Real(n) + Real(a) + Real(b) + 1 + k) * y;
    Real den = (Real(a) + 1 + k) * Real(k + 1);
    return Real(num / den);
  });
  return lead * series;
}

double jacobi_norm_sq(int n, const JacobiParams& params) {
  if (n < 0) {
    throw DegreeError("jacobi_norm_sq: degree must be nonnegative");
  }
  const double a = params.alpha();
  const double b = params.beta();
  double log_norm = (a + b + 1.0) * std::numbers::ln2 + log_gamma(n + a + 1.0) +
                    log_gamma(n + b + 1.0) - log_gamma(n + 1.0);
  if (n == 0) {
    // (a+b+1) Gamma(a+b+1) = Gamma(a+b+2), valid also for a+b+1 <= 0.
    log_norm -= log_gamma(a + b + 2.0);
  } else {
    log_norm -= std::log(2.0 * n + a + b + 1.0) + log_gamma(n + a + b + 1.0);
  }
  return std::exp(log_norm);
}

double jacobi_sup(int n, const JacobiParams& params) {
  const double top = std::max(params.alpha(), params.beta());
  if (top < -0.5) {
    throw ParameterError("jacobi_sup: requires max(alpha, beta) >= -1/2");
  }
  if (n < 0) {
    throw DegreeError("jacobi_sup: degree must be nonnegative");
  }
  return gen_binomial(top, n);
}

double continuous_constant(int n, double alpha) {
  if (alpha < -0.5) {
    throw ParameterError("continuous_constant: requires alpha >= -1/2, got " + std::to_string(alpha));
  }
  if (n < 0) {
    throw DegreeError("continuous_constant: degree must be nonnegative");
  }
  const int m = n + 1;
  const double log_sup = log_gen_binomial(alpha, m);
  const double log_top_derivative =
      log_pochhammer(n + 2.0 * alpha + 2.0, m).log_abs - m * std::numbers::ln2;
  return std::exp(log_sup - log_top_derivative);
}

}  // namespace hahn_lsq
