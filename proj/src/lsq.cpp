#include "hahn_lsq/lsq.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "hahn_lsq/bounds.hpp"
#include "hahn_lsq/errors.hpp"
#include "hahn_lsq/specfun.hpp"

namespace hahn_lsq {

namespace {

void check_fit_degree(int n, const HahnParams& params, const char* what) {
  if (n < 0 || n > params.N()) {
    throw DegreeError(std::string(what) + ": degree " + std::to_string(n) + " outside [0, N=" +
                      std::to_string(params.N()) + "]");
  }
}

// Monomial coefficients (in t) of Q_k(N(1+t)/2) for k = 0..n, column k of the
// returned upper-triangular matrix. Built in 50 digits since the expansion
// cancels like the 3F2 series itself.
Eigen::MatrixXd hahn_to_monomial(int n, const HahnParams& params) {
  using Wide = boost::multiprecision::cpp_bin_float_50;
  const Wide a = params.alpha();
  const Wide b = params.beta();
  const Wide N = params.N();
  const Wide half_N = N / 2;

  // rising[j] = monomial coefficients of (-x)_j with x = N/2 + (N/2) t.
  std::vector<std::vector<Wide>> rising(static_cast<std::size_t>(n) + 1);
  rising[0] = {Wide(1)};
  for (int j = 1; j <= n; ++j) {
    const auto& prev = rising[j - 1];
    std::vector<Wide> next(prev.size() + 1, Wide(0));
    const Wide c0 = Wide(j - 1) - half_N;  // factor (j-1 - x) = c0 - (N/2) t
    for (std::size_t p = 0; p < prev.size(); ++p) {
      next[p] += prev[p] * c0;
      next[p + 1] -= prev[p] * half_N;
    }
    rising[j] = std::move(next);
  }

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<Wide> col(static_cast<std::size_t>(k) + 1, Wide(0));
    Wide h = 1;
    for (int j = 0; j <= k; ++j) {
      for (int p = 0; p <= j; ++p) {
        col[p] += h * rising[j][p];
      }
      h *= Wide(j - k) * (Wide(k) + a + b + 1 + j);
      h /= (a + 1 + j) * (Wide(j) - N) * Wide(j + 1);
    }
    for (int p = 0; p <= k; ++p) {
      M(p, k) = col[p].convert_to<double>();
    }
  }
  return M;
}

double golden_section_max(const std::function<double(double)>& g, double lo, double hi,
                          double& best_t) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double gc = g(c);
  double gd = g(d);
  for (int it = 0; it < 200 && (hi - lo) > 1e-10 * std::max(1.0, std::abs(lo)); ++it) {
    if (gc >= gd) {
      hi = d;
      d = c;
      gd = gc;
      c = hi - inv_phi * (hi - lo);
      gc = g(c);
    } else {
      lo = c;
      c = d;
      gc = gd;
      d = lo + inv_phi * (hi - lo);
      gd = g(d);
    }
  }
  best_t = gc >= gd ? c : d;
  return std::max(gc, gd);
}

// Sorted union of the equispaced and Chebyshev probe points.
std::vector<double> probe_grid() {
  constexpr int equi = 10000;
  constexpr int cheb = 4096;
  std::vector<double> t;
  t.reserve(equi + cheb + 2);
  for (int j = 0; j <= equi; ++j) {
    t.push_back(static_cast<double>(2 * j - equi) / equi);
  }
  for (int j = 0; j <= cheb; ++j) {
    t.push_back(-std::cos(std::numbers::pi * j / cheb));
  }
  t.front() = -1.0;
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  t.front() = -1.0;
  t.back() = 1.0;
  return t;
}

}  // namespace

Approximant::Approximant(HahnParams params, std::vector<double> coefficients)
    : params_(params), coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw DegreeError("Approximant: needs at least one coefficient");
  }
  if (degree() > params_.N()) {
    throw DegreeError("Approximant: degree " + std::to_string(degree()) + " exceeds N=" +
                      std::to_string(params_.N()));
  }
  for (double c : coefficients_) {
    if (!std::isfinite(c)) {
      throw InstabilityError("Approximant: non-finite coefficient");
    }
  }
}

double Approximant::operator()(double t) const { return evaluate(*this, t); }

std::vector<double> sample_on_grid(const FunctionSpec& f, int N) {
  std::vector<double> samples(static_cast<std::size_t>(N) + 1);
  for (int mu = 0; mu <= N; ++mu) {
    const double v = f(grid_node(mu, N));
    if (!std::isfinite(v)) {
      throw DomainError("function '" + f.name + "' is not finite at grid node " + std::to_string(mu));
    }
    samples[mu] = v;
  }
  return samples;
}

Approximant fit_hahn_samples(std::span<const double> samples, int n, const HahnParams& params) {
  check_fit_degree(n, params, "fit_hahn");
  const int N = params.N();
  if (samples.size() != static_cast<std::size_t>(N) + 1) {
    throw LengthError("fit_hahn: expected N+1 = " + std::to_string(N + 1) + " samples");
  }
  const DiscreteWeight w(params);
  std::vector<CompensatedSum> num(static_cast<std::size_t>(n) + 1);
  std::vector<CompensatedSum> den(static_cast<std::size_t>(n) + 1);
  for (int mu = 0; mu <= N; ++mu) {
    const auto q = hahn_eval_all(n, mu, params);
    for (int k = 0; k <= n; ++k) {
      num[k].add(samples[mu] * q[k] * w[mu]);
      den[k].add(q[k] * q[k] * w[mu]);
    }
  }
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    c[k] = num[k].result() / den[k].result();
  }
  return {params, std::move(c)};
}

Approximant fit_hahn(const FunctionSpec& f, int n, const HahnParams& params) {
  check_fit_degree(n, params, "fit_hahn");
  return fit_hahn_samples(sample_on_grid(f, params.N()), n, params);
}

Approximant fit_normal_equations(const FunctionSpec& f, int n, const HahnParams& params) {
  check_fit_degree(n, params, "fit_normal_equations");
  using MatrixL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using VectorL = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const int N = params.N();
  const auto samples = sample_on_grid(f, N);
  const DiscreteWeight w(params);

  MatrixL gram = MatrixL::Zero(n + 1, n + 1);
  VectorL rhs = VectorL::Zero(n + 1);
  std::vector<long double> powers(2 * static_cast<std::size_t>(n) + 1);
  for (int mu = 0; mu <= N; ++mu) {
    const long double t = static_cast<long double>(2 * mu - N) / N;
    powers[0] = 1.0L;
    for (std::size_t p = 1; p < powers.size(); ++p) {
      powers[p] = powers[p - 1] * t;
    }
    const long double wm = w[mu];
    for (int i = 0; i <= n; ++i) {
      rhs(i) += wm * samples[mu] * powers[i];
      for (int j = 0; j <= n; ++j) {
        gram(i, j) += wm * powers[i + j];
      }
    }
  }

  const Eigen::LLT<MatrixL> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw InstabilityError("fit_normal_equations: Gram matrix not numerically positive definite");
  }
  const long double rcond = llt.rcond();
  if (!(rcond > 0.0L) || 1.0L / rcond > kMaxGramCondition) {
    throw InstabilityError("fit_normal_equations: Gram condition estimate " +
                           std::to_string(static_cast<double>(1.0L / rcond)) + " exceeds 1e12");
  }
  const VectorL monomial = llt.solve(rhs);

  // monomial = M c with M upper triangular.
  const Eigen::MatrixXd M = hahn_to_monomial(n, params);
  const Eigen::VectorXd c =
      M.triangularView<Eigen::Upper>().solve(monomial.cast<double>().eval());
  return {params, std::vector<double>(c.data(), c.data() + c.size())};
}

double evaluate(const Approximant& a, double t) {
  if (!(t >= -1.0 && t <= 1.0)) {
    throw DomainError("evaluate: t must lie in [-1, 1], got " + std::to_string(t));
  }
  const auto q = hahn_eval_all(a.degree(), hahn_abscissa(t, a.params().N()), a.params());
  CompensatedSum sum;
  const auto c = a.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    sum.add(c[k] * q[k]);
  }
  return sum.result();
}

ErrorReport sup_error(const FunctionSpec& f, const Approximant& a) {
  const auto err = [&](double t) { return std::abs(f(t) - evaluate(a, t)); };
  static const std::vector<double> grid = probe_grid();

  std::size_t best = 0;
  double best_err = -1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double e = err(grid[i]);
    if (e > best_err) {
      best_err = e;
      best = i;
    }
  }

  ErrorReport report;
  report.sup_error = best_err;
  report.argmax = grid[best];
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[std::min(best + 1, grid.size() - 1)];
  double t_ref = report.argmax;
  const double refined = golden_section_max(err, lo, hi, t_ref);
  if (refined > report.sup_error) {
    report.sup_error = refined;
    report.argmax = t_ref;
  }

  const auto& p = a.params();
  const int n = a.degree();
  const auto dsup = f.derivative_bound(n + 1);
  if (dsup && p.is_symmetric() && p.alpha() > -0.5 && n + 1 <= p.N() &&
      hypothesis_holds(n, p.alpha(), p.N())) {
    report.bound = worst_case_constant(n, p.N(), p.alpha()) * *dsup;
    if (*report.bound > 0.0) {
      report.ratio = report.sup_error / *report.bound;
    }
  }
  return report;
}

FunctionSpec extremal_function(int n, const HahnParams& params) {
  if (!params.is_symmetric()) {
    throw ParameterError("extremal_function: requires alpha == beta");
  }
  const double alpha = params.alpha();
  const int N = params.N();
  if (n < 0 || !hypothesis_holds(n, alpha, N)) {
    throw ThresholdError("extremal_function: n + 1 = " + std::to_string(n + 1) +
                         " exceeds n(alpha, N) = " + std::to_string(degree_threshold(alpha, N)));
  }
  const int m = n + 1;
  // |Q_m^{(m)}| = m! (m + 2alpha + 1)_m / ((alpha+1)_m N (N-1) ... (N-m+1)),
  // constant because Q_m has degree m. The (N/2)^m chain-rule factor and the
  // norm of Q_m cancel between numerator and denominator of Qhat_m / S.
  double log_scale = m * std::log(2.0 / N) - log_gamma(m + 1.0) -
                     log_pochhammer(m + 2.0 * alpha + 1.0, m).log_abs +
                     log_pochhammer(alpha + 1.0, m).log_abs;
  for (int i = 0; i < m; ++i) {
    log_scale += std::log(static_cast<double>(N - i));
  }
  const double scale = ((m % 2 == 0) ? 1.0 : -1.0) * std::exp(log_scale);

  FunctionSpec f;
  f.name = "extremal:" + std::to_string(n);
  f.evaluator = [params, m, scale](double t) {
    return scale * hahn_eval_recurrence(m, hahn_abscissa(t, params.N()), params);
  };
  f.derivative_sup = [m](int k) -> std::optional<double> {
    if (k == m) {
      return 1.0;
    }
    if (k > m) {
      return 0.0;
    }
    return std::nullopt;
  };
  return f;
}

double class_K_defect(const FunctionSpec& f, int n, double alpha) {
  if (alpha < -0.5) {
    throw ParameterError("class_K_defect: requires alpha >= -1/2");
  }
  if (n < 0) {
    throw DomainError("class_K_defect: order must be nonnegative");
  }
  const auto dsup = f.derivative_bound(n);
  if (!dsup) {
    throw MissingBoundError("class_K_defect: function '" + f.name + "' has no bound for derivative order " +
                            std::to_string(n));
  }
  if (*dsup == 0.0) {
    return 0.0;
  }
  if (n == 0) {
    return alpha == -0.5 ? *dsup : 0.0;  // n^{alpha+1/2} at n = 0
  }
  return std::exp(std::log(*dsup) + (alpha + 0.5) * std::log(static_cast<double>(n)) -
                  n * std::numbers::ln2 - log_gamma(n + 1.0));
}

}  // namespace hahn_lsq
