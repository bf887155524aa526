#pragma once

// Discrete least squares on the equidistant grid x_mu = -1 + 2 mu / N,
// expressed in the Hahn basis Q_k(N(1+t)/2).

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hahn_lsq/hahn.hpp"

namespace hahn_lsq {

/// A named function on [-1, 1] with optional certified derivative bounds.
struct FunctionSpec {
  std::string name;
  std::function<double(double)> evaluator;
  /// derivative_sup(k) >= sup |f^{(k)}| on [-1, 1], or nullopt when unknown.
  std::function<std::optional<double>(int)> derivative_sup;

  double operator()(double t) const { return evaluator(t); }
  std::optional<double> derivative_bound(int k) const {
    return derivative_sup ? derivative_sup(k) : std::nullopt;
  }
};

/// Degree-n expansion sum_k c_k Q_k(N(1+t)/2; alpha, beta, N).
class Approximant {
 public:
  Approximant(HahnParams params, std::vector<double> coefficients);

  const HahnParams& params() const { return params_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  std::span<const double> coefficients() const { return coefficients_; }
  bool in_validated_range() const { return hahn_lsq::in_validated_range(degree(), params_.N()); }

  double operator()(double t) const;

 private:
  HahnParams params_;
  std::vector<double> coefficients_;
};

struct ErrorReport {
  double sup_error = 0.0;
  double argmax = 0.0;
  std::optional<double> bound;
  std::optional<double> ratio;
};

/// f sampled at the N+1 grid nodes.
std::vector<double> sample_on_grid(const FunctionSpec& f, int N);

/// LS_n^N f via c_k = <f, Q_k>_omega / <Q_k, Q_k>_omega.
Approximant fit_hahn(const FunctionSpec& f, int n, const HahnParams& params);
Approximant fit_hahn_samples(std::span<const double> samples, int n, const HahnParams& params);

/// Same fit through the weighted monomial Gram system and a Cholesky solve,
/// converted back to Hahn coefficients. Throws InstabilityError when the Gram
/// condition estimate exceeds kMaxGramCondition.
inline constexpr double kMaxGramCondition = 1e12;
Approximant fit_normal_equations(const FunctionSpec& f, int n, const HahnParams& params);

double evaluate(const Approximant& a, double t);

/// sup over [-1, 1] of |f - a|: 10001 equispaced points plus 4097 Chebyshev
/// points, then golden-section refinement around the best one. The result is a
/// lower estimate of the true sup. A bound and ratio are attached when f has a
/// certified (n+1)-st derivative bound and the degree threshold holds.
ErrorReport sup_error(const FunctionSpec& f, const Approximant& a);

/// The function attaining the worst case for degree n:
///   f*(t) = (-1)^{n+1} Q_{n+1}(N(1+t)/2) (2/N)^{n+1} / |Q_{n+1}^{(n+1)}|,
/// i.e. the normalized Q_{n+1} divided by the sup of its (n+1)-st derivative.
/// Its fit of degree n is zero, so its error is D_{n,N}.
FunctionSpec extremal_function(int n, const HahnParams& params);

/// derivative_sup(n) n^{alpha+1/2} / (2^n n!).
double class_K_defect(const FunctionSpec& f, int n, double alpha);

}  // namespace hahn_lsq
