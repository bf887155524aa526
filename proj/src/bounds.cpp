#include "hahn_lsq/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hahn_lsq/errors.hpp"
#include "hahn_lsq/jacobi.hpp"
#include "hahn_lsq/specfun.hpp"

namespace hahn_lsq {

namespace {

void require_alpha_above_minus_half(double alpha, const char* what) {
  if (!(alpha > -0.5) || !std::isfinite(alpha)) {
    throw ParameterError(std::string(what) + ": requires alpha > -1/2, got " + std::to_string(alpha));
  }
}

}  // namespace

double degree_threshold(double alpha, int N) {
  require_alpha_above_minus_half(alpha, "degree_threshold");
  if (N < 1) {
    throw ParameterError("degree_threshold: requires N >= 1");
  }
  return 0.5 - alpha + 0.5 * std::sqrt((2.0 * alpha + 1.0) * (2.0 * alpha + 2.0 * N + 1.0));
}

bool hypothesis_holds(int n, double alpha, int N) {
  return n >= 0 && static_cast<double>(n) + 1.0 <= degree_threshold(alpha, N);
}

double ratio_discrete_continuous(int n, int N) {
  if (n < 0 || n + 1 > N) {
    throw DegreeError("ratio_discrete_continuous: requires 0 <= n and n + 1 <= N, got n=" +
                      std::to_string(n) + " N=" + std::to_string(N));
  }
  double prod = 1.0;
  for (int i = 1; i <= n; ++i) {
    prod *= 1.0 - static_cast<double>(i) / N;
  }
  return prod;
}

double worst_case_constant_unchecked(int n, int N, double alpha) {
  require_alpha_above_minus_half(alpha, "worst_case_constant");
  const double grid = ratio_discrete_continuous(n, N);
  const double log_gamma_part = (n + 1.0) * std::numbers::ln2 + log_gamma(n + 2.0 * alpha + 2.0) +
                                log_gamma(n + alpha + 2.0) - log_gamma(n + 2.0) -
                                log_gamma(2.0 * n + 2.0 * alpha + 3.0) - log_gamma(alpha + 1.0);
  return std::exp(log_gamma_part) * grid;
}

double worst_case_constant(int n, int N, double alpha) {
  if (!hypothesis_holds(n, alpha, N)) {
    throw ThresholdError("worst_case_constant: n + 1 = " + std::to_string(n + 1) +
                         " exceeds n(alpha, N) = " + std::to_string(degree_threshold(alpha, N)));
  }
  return worst_case_constant_unchecked(n, N, alpha);
}

double simplified_constant(int n, double alpha) {
  require_alpha_above_minus_half(alpha, "simplified_constant");
  if (n < 1) {
    throw DomainError("simplified_constant: requires n >= 1");
  }
  const double nn = n;
  const double log_value = 0.5 * std::log(std::numbers::pi * nn) - (nn + 1.0) * std::numbers::ln2 -
                           log_gamma(nn + 2.0) + alpha * std::log(nn) - log_gamma(alpha + 1.0) -
                           2.0 * alpha * std::numbers::ln2;
  return std::exp(log_value);
}

Alpha0Constant alpha0_constant(int n) {
  if (n < 0) {
    throw DomainError("alpha0_constant: requires n >= 0");
  }
  const double m = n + 1.0;
  Alpha0Constant out;
  out.log_D = 0.5 * std::log(std::numbers::pi * m) - m * std::numbers::ln2 - log_gamma(m + 1.0) +
              1.0 / (6.0 * m) - 1.0 / (24.0 * m + 1.0);
  out.log_d = 2.0 / (12.0 * m + 1.0) + 1.0 / (24.0 * m + 1.0) - 1.0 / (6.0 * m) - 1.0 / (24.0 * m);
  out.log_exact = m * std::numbers::ln2 + log_gamma(m + 1.0) - log_gamma(2.0 * m + 1.0);
  out.D = std::exp(out.log_D);
  out.d = std::exp(out.log_d);
  out.exact = std::exp(out.log_exact);
  return out;
}

MinNodes min_nodes(int n, double alpha) {
  require_alpha_above_minus_half(alpha, "min_nodes");
  if (n < 0) {
    throw DomainError("min_nodes: requires n >= 0");
  }
  const double nn = n;
  const double bound = (2.0 * nn * nn + (4.0 * alpha + 2.0) * nn) / (2.0 * alpha + 1.0);
  auto c3 = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(bound)));
  // The rule is equivalent to n + 1 <= n(alpha, N); settle ceil() rounding
  // against the threshold itself so the guarantee holds in floating point.
  while (c3 > 1 && hypothesis_holds(n, alpha, static_cast<int>(c3 - 1))) {
    --c3;
  }
  while (!hypothesis_holds(n, alpha, static_cast<int>(c3))) {
    ++c3;
  }
  MinNodes out;
  out.c3 = c3;
  out.c4 = std::max<std::int64_t>(1, 2LL * n * (n + 1));
  out.c4_applicable = alpha >= 0.0;
  return out;
}

BoundReport bound_report(int n, int N, double alpha) {
  BoundReport r;
  r.n = n;
  r.N = N;
  r.alpha = alpha;
  r.threshold = degree_threshold(alpha, N);
  r.hypothesis_ok = hypothesis_holds(n, alpha, N);
  r.D = worst_case_constant_unchecked(n, N, alpha);
  r.C = continuous_constant(n, alpha);
  r.ratio = ratio_discrete_continuous(n, N);
  if (n >= 1) {
    r.simplified = simplified_constant(n, alpha);
  }
  const auto nodes = min_nodes(n, alpha);
  r.node_min_c3 = nodes.c3;
  r.node_min_c4 = nodes.c4;
  return r;
}

}  // namespace hahn_lsq
