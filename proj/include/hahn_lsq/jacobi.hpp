#pragma once

// Jacobi polynomials P_n^{alpha,beta} on [-1, 1] with weight
// (1-x)^alpha (1+x)^beta.

namespace hahn_lsq {

class JacobiParams {
 public:
  /// Throws ParameterError unless alpha, beta > -1.
  JacobiParams(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  double weight(double x) const;

 private:
  double alpha_;
  double beta_;
};

/// P_n(x) from the terminating 2F1 series in (1-x)/2. P_n(1) = (alpha+1)_n/n!.
double jacobi_eval(int n, double x, const JacobiParams& params);

/// Closed-form squared norm in L2 with the Jacobi weight.
double jacobi_norm_sq(int n, const JacobiParams& params);

/// max over [-1, 1] of |P_n| = C(n + max(alpha, beta), n); needs max(alpha, beta) >= -1/2.
double jacobi_sup(int n, const JacobiParams& params);

/// Worst-case constant of continuous least squares with P_n^{alpha,alpha}:
///   C_n = sup|P_{n+1}| / sup|P_{n+1}^{(n+1)}|,
/// where the (n+1)-st derivative is the constant (n+2alpha+2)_{n+1} / 2^{n+1}.
double continuous_constant(int n, double alpha);

}  // namespace hahn_lsq
