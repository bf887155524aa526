#include "hahn_lsq/hahn.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "hahn_lsq/bounds.hpp"
#include "hahn_lsq/errors.hpp"
#include "hahn_lsq/specfun.hpp"
#include "series.hpp"

namespace hahn_lsq {

namespace {

void check_degree(int n, const HahnParams& params, const char* what) {
  if (n < 0 || n > params.N()) {
    throw DegreeError(std::string(what) + ": degree " + std::to_string(n) + " outside [0, N=" +
                      std::to_string(params.N()) + "]");
  }
}

}  // namespace

HahnParams::HahnParams(double alpha, double beta, int N) : alpha_(alpha), beta_(beta), N_(N) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw ParameterError("HahnParams: requires alpha > -1 and beta > -1, got alpha=" +
                         std::to_string(alpha) + " beta=" + std::to_string(beta));
  }
  if (N < 1) {
    throw ParameterError("HahnParams: requires N >= 1, got " + std::to_string(N));
  }
}

double weight(int i, const HahnParams& params) {
  if (i < 0 || i > params.N()) {
    throw IndexError("weight: index " + std::to_string(i) + " outside [0, " +
                     std::to_string(params.N()) + "]");
  }
  return std::exp(log_gen_binomial(params.alpha(), i) +
                  log_gen_binomial(params.beta(), params.N() - i));
}

DiscreteWeight::DiscreteWeight(const HahnParams& params) : params_(params) {
  values_.reserve(static_cast<std::size_t>(params.N()) + 1);
  for (int i = 0; i <= params.N(); ++i) {
    values_.push_back(weight(i, params));
  }
}

double hahn_eval(int n, double x, const HahnParams& params) {
  check_degree(n, params, "hahn_eval");
  const double a = params.alpha();
  const double b = params.beta();
  const int N = params.N();

  // term_{k+1}/term_k = (k-n)(n+a+b+1+k)(k-x) / ((a+1+k)(k-N)(k+1))
  return detail::adaptive_series(n, [&](int k, auto zero) {
    using Real = decltype(zero);
    Real num = Real(k - n) * (Real(n) + Real(a) + Real(b) + 1 + k) * (Real(k) - Real(x));
    Real den = (Real(a) + 1 + k) * Real(k - N) * Real(k + 1);
    return Real(num / den);
  });
}

std::vector<double> hahn_eval_all(int n, double x, const HahnParams& params) {
  check_degree(n, params, "hahn_eval_all");
  const double a = params.alpha();
  const double b = params.beta();
  const double N = params.N();

  std::vector<double> q(static_cast<std::size_t>(n) + 1);
  q[0] = 1.0;
  if (n == 0) {
    return q;
  }
  // Q_1 directly: the general coefficients are 0/0 at degree 0 when a+b = -1.
  q[1] = 1.0 - (a + b + 2.0) * x / ((a + 1.0) * N);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    const double A = (k + a + b + 1.0) * (k + a + 1.0) * (N - k) / ((s + 1.0) * (s + 2.0));
    const double C = k * (k + a + b + N + 1.0) * (k + b) / (s * (s + 1.0));
    q[k + 1] = ((A + C - x) * q[k] - C * q[k - 1]) / A;
  }
  return q;
}

double hahn_eval_recurrence(int n, double x, const HahnParams& params) {
  return hahn_eval_all(n, x, params).back();
}

double hahn_norm_sq(int k, const HahnParams& params) {
  check_degree(k, params, "hahn_norm_sq");
  const double a = params.alpha();
  const double b = params.beta();
  const double N = params.N();

  // With (-N)_k = (-1)^k N!/(N-k)! the signs cancel and
  //   <Q_k,Q_k> = Gamma(N+k+a+b+2)/Gamma(N+1) * (b+1)_k k!
  //               / (Gamma(k+a+b+1) (2k+a+b+1) (a+1)_k N(N-1)...(N-k+1)).
  // At k = 0 the factor Gamma(a+b+1)(a+b+1) is Gamma(a+b+2), which stays
  // positive even when a+b+1 <= 0.
  double log_norm =
      std::log(boost::math::tgamma_ratio(N + k + a + b + 2.0, N + 1.0));
  if (k == 0) {
    log_norm -= log_gamma(a + b + 2.0);
    return std::exp(log_norm);
  }
  log_norm += log_pochhammer(b + 1.0, k).log_abs + log_gamma(k + 1.0);
  log_norm -= log_gamma(k + a + b + 1.0) + std::log(2.0 * k + a + b + 1.0);
  log_norm -= log_pochhammer(a + 1.0, k).log_abs;
  for (int i = 0; i < k; ++i) {
    log_norm -= std::log(N - i);
  }
  return std::exp(log_norm);
}

double inner_product(std::span<const double> f_values, std::span<const double> g_values,
                     const DiscreteWeight& weight) {
  if (f_values.size() != weight.size() || g_values.size() != weight.size()) {
    throw LengthError("inner_product: expected arrays of length N+1 = " +
                      std::to_string(weight.size()));
  }
  CompensatedSum sum;
  for (std::size_t i = 0; i < weight.size(); ++i) {
    sum.add(f_values[i] * g_values[i] * weight.values()[i]);
  }
  return sum.result();
}

double normalized_hahn_eval(int k, double t, const HahnParams& params) {
  if (!params.is_symmetric()) {
    throw ParameterError("normalized_hahn_eval: requires alpha == beta");
  }
  check_degree(k, params, "normalized_hahn_eval");
  const double q = hahn_eval_recurrence(k, hahn_abscissa(t, params.N()), params);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * q / std::sqrt(hahn_norm_sq(k, params));
}

bool endpoint_max_check(int n, double alpha, int N) {
  const double threshold = degree_threshold(alpha, N);
  if (n < 0 || static_cast<double>(n) > threshold) {
    throw ThresholdError("endpoint_max_check: degree " + std::to_string(n) +
                         " exceeds n(alpha, N) = " + std::to_string(threshold));
  }
  const auto params = HahnParams::symmetric(alpha, N);
  constexpr double tol = 1e-10;
  constexpr int refine = 64;

  const double at_zero = hahn_eval(n, 0.0, params);
  const double at_end = hahn_eval(n, static_cast<double>(N), params);
  const double end_sign = (n % 2 == 0) ? 1.0 : -1.0;
  if (std::abs(at_zero - 1.0) > tol || std::abs(at_end - end_sign) > tol) {
    return false;
  }
  for (int j = 1; j < refine * N; ++j) {
    const double x = static_cast<double>(j) / refine;
    if (std::abs(hahn_eval(n, x, params)) > 1.0 + tol) {
      return false;
    }
  }
  return true;
}

}  // namespace hahn_lsq
