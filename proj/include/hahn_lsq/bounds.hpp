#pragma once

// Closed-form worst-case constants and degree thresholds for discrete least
// squares on N+1 equidistant nodes with the symmetric Hahn weight.

#include <cstdint>
#include <optional>

namespace hahn_lsq {

/// n(alpha, N) = 1/2 - alpha + sqrt((2alpha+1)(2alpha+2N+1)) / 2, alpha > -1/2.
double degree_threshold(double alpha, int N);

/// n + 1 <= n(alpha, N), compared without slack.
bool hypothesis_holds(int n, double alpha, int N);

/// prod_{i=0}^{n} (1 - i/N) = N! / (N^{n+1} (N-n-1)!). Requires n + 1 <= N.
double ratio_discrete_continuous(int n, int N);

/// Sharp constant D_{n,N} of the sup-norm error bound
///   sup|f - LS_n^N f| <= D_{n,N} sup|f^{(n+1)}|.
/// Throws ThresholdError unless n + 1 <= n(alpha, N).
double worst_case_constant(int n, int N, double alpha);

/// D_{n,N} from the gamma-function formula without checking the threshold.
/// Outside the hypothesis the value is no longer known to be sharp.
double worst_case_constant_unchecked(int n, int N, double alpha);

/// Leading-order form sqrt(pi n) / (2^{n+1} (n+1)!) * n^alpha / (Gamma(alpha+1) 2^{2alpha}).
double simplified_constant(int n, double alpha);

/// The alpha = 0 constants: D_n bounds the exact constant from above and
/// D_n * d_n from below.
struct Alpha0Constant {
  double D = 0.0;
  double d = 0.0;
  double exact = 0.0;  // 2^{n+1} (n+1)! / (2n+2)!
  double log_D = 0.0;
  double log_d = 0.0;
  double log_exact = 0.0;
};
Alpha0Constant alpha0_constant(int n);

/// Smallest node counts from the two convergence rules:
///   c3 = ceil((2n^2 + (4alpha+2) n) / (2alpha+1))  (alpha > -1/2)
///   c4 = 2n(n+1)                                    (meaningful for alpha >= 0)
/// Both are clamped to at least 1.
struct MinNodes {
  std::int64_t c3 = 1;
  std::int64_t c4 = 1;
  bool c4_applicable = false;
};
MinNodes min_nodes(int n, double alpha);

struct BoundReport {
  int n = 0;
  int N = 0;
  double alpha = 0.0;
  double threshold = 0.0;
  bool hypothesis_ok = false;
  double D = 0.0;
  double C = 0.0;
  double ratio = 0.0;
  std::optional<double> simplified;  // undefined at n = 0
  std::int64_t node_min_c3 = 1;
  std::int64_t node_min_c4 = 1;
};
BoundReport bound_report(int n, int N, double alpha);

}  // namespace hahn_lsq
