#pragma once

// Hahn polynomials Q_n(x; alpha, beta, N) on the grid {0, ..., N}.

#include <span>
#include <vector>

namespace hahn_lsq {

/// Degree and grid size for which double evaluation has been validated.
inline constexpr int kValidatedMaxDegree = 40;
inline constexpr int kValidatedMaxGrid = 10000;

/// True when (n, N) lies inside the validated numerical range. Callers that
/// go beyond it should surface an instability warning.
constexpr bool in_validated_range(int n, int N) {
  return n <= kValidatedMaxDegree && N <= kValidatedMaxGrid;
}

class HahnParams {
 public:
  /// Throws ParameterError unless alpha, beta > -1 and N >= 1.
  HahnParams(double alpha, double beta, int N);

  static HahnParams symmetric(double alpha, int N) { return {alpha, alpha, N}; }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  int N() const { return N_; }
  bool is_symmetric() const { return alpha_ == beta_; }

  friend bool operator==(const HahnParams&, const HahnParams&) = default;

 private:
  double alpha_;
  double beta_;
  int N_;
};

/// omega(i) = C(alpha + i, i) C(beta + N - i, N - i).
double weight(int i, const HahnParams& params);

/// The weight sampled on the whole grid. Immutable once built.
class DiscreteWeight {
 public:
  explicit DiscreteWeight(const HahnParams& params);

  const HahnParams& params() const { return params_; }
  std::span<const double> values() const { return values_; }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return values_.size(); }

 private:
  HahnParams params_;
  std::vector<double> values_;
};

/// Q_n(x) from the terminating 3F2 series. The series alternates and cancels
/// badly once n grows; when the double pass cannot be trusted the sum is
/// redone in 50 (and if needed 100) significant digits.
double hahn_eval(int n, double x, const HahnParams& params);

/// Q_n(x) by the ascending three-term recurrence in the degree.
double hahn_eval_recurrence(int n, double x, const HahnParams& params);

/// Q_0(x), ..., Q_n(x) in one recurrence sweep.
std::vector<double> hahn_eval_all(int n, double x, const HahnParams& params);

/// <Q_k, Q_k>_omega from the closed form, evaluated in log space.
double hahn_norm_sq(int k, const HahnParams& params);

/// sum_i f(i) g(i) omega(i), compensated.
double inner_product(std::span<const double> f_values, std::span<const double> g_values,
                     const DiscreteWeight& weight);

/// Orthonormal symmetric family on [-1, 1]:
/// (-1)^k Q_k(N(1+t)/2; alpha, alpha, N) / sqrt(<Q_k, Q_k>).
double normalized_hahn_eval(int k, double t, const HahnParams& params);

/// Checks on a 64x refined grid over [0, N] that |Q_n| peaks at the ends with
/// Q_n(0) = 1 and Q_n(N) = (-1)^n. Only defined for n <= n(alpha, N).
bool endpoint_max_check(int n, double alpha, int N);

/// Map t in [-1, 1] onto the Hahn variable x = N(1+t)/2.
inline double hahn_abscissa(double t, int N) { return 0.5 * N * (1.0 + t); }

/// Grid node x_mu = -1 + 2 mu / N, computed as (2 mu - N) / N.
inline double grid_node(int mu, int N) {
  return static_cast<double>(2 * mu - N) / static_cast<double>(N);
}

}  // namespace hahn_lsq
