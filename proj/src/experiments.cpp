#include "hahn_lsq/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hahn_lsq/bounds.hpp"
#include "hahn_lsq/functions.hpp"
#include "hahn_lsq/hahn.hpp"
#include "hahn_lsq/jacobi.hpp"
#include "hahn_lsq/lsq.hpp"

namespace hahn_lsq {

namespace {

Cell cell(double v) { return v; }
Cell cell(int v) { return static_cast<std::int64_t>(v); }
Cell cell(std::int64_t v) { return v; }
Cell cell(bool v) { return v; }
Cell cell(std::string v) { return v; }
Cell cell(const char* v) { return std::string(v); }
Cell cell(const std::optional<double>& v) { return v ? Cell(*v) : Cell(std::monostate{}); }

void warn_range(ExperimentResult& result, int n, int N) {
  if (!in_validated_range(n, N)) {
    result.warnings.push_back("instability warning: degree " + std::to_string(n) + " with N=" +
                              std::to_string(N) + " is outside the validated range (n <= " +
                              std::to_string(kValidatedMaxDegree) + ", N <= " +
                              std::to_string(kValidatedMaxGrid) + ")");
  }
}

void require_symmetric(const ExperimentConfig& c, const char* what) {
  if (c.beta_value() != c.alpha) {
    throw ConfigError(std::string(what) + ": requires alpha == beta");
  }
  if (!(c.alpha > -0.5)) {
    throw ConfigError(std::string(what) + ": requires alpha > -1/2");
  }
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::basis: return "basis";
    case Command::fit: return "fit";
    case Command::bounds: return "bounds";
    case Command::sharpness: return "sharpness";
    case Command::convergence: return "convergence";
    case Command::compare: return "compare";
  }
  return "unknown";
}

std::optional<Command> parse_command(const std::string& name) {
  for (auto c : {Command::basis, Command::fit, Command::bounds, Command::sharpness,
                 Command::convergence, Command::compare}) {
    if (to_string(c) == name) {
      return c;
    }
  }
  return std::nullopt;
}

std::string to_string(NodeRule r) {
  switch (r) {
    case NodeRule::explicit_nodes: return "explicit";
    case NodeRule::c3: return "c3";
    case NodeRule::c4: return "c4";
  }
  return "unknown";
}

std::optional<NodeRule> parse_node_rule(const std::string& name) {
  if (name == "explicit") return NodeRule::explicit_nodes;
  if (name == "c3") return NodeRule::c3;
  if (name == "c4") return NodeRule::c4;
  return std::nullopt;
}

int ExperimentConfig::nodes_for(int n) const {
  switch (node_rule) {
    case NodeRule::explicit_nodes:
      if (!nodes) {
        throw ConfigError("node rule 'explicit' requires --nodes");
      }
      return *nodes;
    case NodeRule::c3:
      return static_cast<int>(min_nodes(n, alpha).c3);
    case NodeRule::c4:
      return static_cast<int>(std::max<std::int64_t>(1, 2LL * n * (n + 1)));
  }
  return 1;
}

void ExperimentConfig::validate() const {
  if (!std::isfinite(alpha) || !(alpha > -1.0)) {
    throw ConfigError("alpha must be > -1");
  }
  if (!std::isfinite(beta_value()) || !(beta_value() > -1.0)) {
    throw ConfigError("beta must be > -1");
  }
  if (n_first < 0 || n_last < n_first) {
    throw ConfigError("degree range must satisfy 0 <= A <= B");
  }
  if (node_rule == NodeRule::explicit_nodes && (!nodes || *nodes < 1)) {
    throw ConfigError("an explicit grid needs --nodes N with N >= 1");
  }
  if (node_rule == NodeRule::c3 && !(alpha > -0.5)) {
    throw ConfigError("node rule c3 requires alpha > -1/2");
  }
  if (node_rule == NodeRule::c4 && n_first == 0) {
    throw ConfigError("node rule c4 gives N = 0 at n = 0; start the range at n >= 1");
  }
  if (hat_points < 0) {
    throw ConfigError("hat-points must be nonnegative");
  }
  for (int n = n_first; n <= n_last; ++n) {
    const int N = nodes_for(n);
    if (n > N) {
      throw ConfigError("degree n=" + std::to_string(n) + " exceeds N=" + std::to_string(N));
    }
  }
  if (command == Command::fit || command == Command::convergence) {
    const auto params = HahnParams(alpha, beta_value(), nodes_for(n_last));
    try {
      // extremal:<n> also needs the threshold, checked per cell later.
      if (!function.starts_with("extremal:")) {
        make_function(function, params);
      }
    } catch (const ParameterError& e) {
      throw ConfigError(e.what());
    }
  }
  if (command == Command::convergence && function == "runge") {
    throw ConfigError("convergence: function 'runge' has no derivative bound");
  }
  if (command == Command::sharpness || command == Command::compare) {
    require_symmetric(*this, to_string(command).c_str());
  }
  if (command == Command::bounds && !(alpha > -0.5)) {
    throw ConfigError("bounds: requires alpha > -1/2");
  }
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = to_string(command);
  j["alpha"] = alpha;
  j["beta"] = beta_value();
  j["n_first"] = n_first;
  j["n_last"] = n_last;
  j["node_rule"] = to_string(node_rule);
  j["nodes"] = nodes ? nlohmann::ordered_json(*nodes) : nlohmann::ordered_json(nullptr);
  j["function"] = function;
  j["format"] = format == OutputFormat::csv ? "csv" : "json";
  j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
  return j;
}

ExperimentResult cmd_basis(const ExperimentConfig& c) {
  const int n = c.n_last;
  const int N = c.nodes_for(n);
  const HahnParams params(c.alpha, c.beta_value(), N);
  ExperimentResult result{Table({"quantity", "k", "j", "x", "value"}), {}, kExitOk};
  warn_range(result, n, N);
  auto& t = result.table;
  const Cell none = std::monostate{};

  const DiscreteWeight w(params);
  for (int i = 0; i <= N; ++i) {
    t.add_row({cell("weight"), none, none, cell(static_cast<double>(i)), cell(w[i])});
  }

  std::vector<std::vector<double>> q(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= N; ++i) {
      q[k].push_back(hahn_eval(k, i, params));
      t.add_row({cell("Q"), cell(k), none, cell(static_cast<double>(i)), cell(q[k].back())});
    }
  }

  std::vector<double> norms(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    norms[k] = hahn_norm_sq(k, params);
    t.add_row({cell("norm_sq"), cell(k), none, none, cell(norms[k])});
    t.add_row({cell("norm_sq_grid"), cell(k), none, none, cell(inner_product(q[k], q[k], w))});
  }
  for (int k = 1; k <= n; ++k) {
    for (int j = 0; j < k; ++j) {
      const double r = inner_product(q[j], q[k], w) / std::sqrt(norms[j] * norms[k]);
      t.add_row({cell("orth_residual"), cell(k), cell(j), none, cell(r)});
    }
  }

  if (params.is_symmetric() && c.alpha > -0.5) {
    const double threshold = degree_threshold(c.alpha, N);
    for (int k = 0; k <= n && k <= threshold; ++k) {
      t.add_row({cell("endpoint_max"), cell(k), none, none, cell(endpoint_max_check(k, c.alpha, N))});
    }
    for (int k = 0; k <= n && c.hat_points > 0; ++k) {
      for (int i = 0; i <= c.hat_points; ++i) {
        const double tt = static_cast<double>(2 * i - c.hat_points) / c.hat_points;
        t.add_row({cell("Qhat"), cell(k), none, cell(tt), cell(normalized_hahn_eval(k, tt, params))});
      }
    }
  }
  return result;
}

ExperimentResult cmd_fit(const ExperimentConfig& c) {
  std::vector<std::string> cols = {"function", "n",     "N",     "alpha", "beta",
                                   "sup_error", "argmax", "bound", "ratio", "hypothesis_ok"};
  for (int k = 0; k <= c.n_last; ++k) {
    cols.push_back("c_" + std::to_string(k));
  }
  ExperimentResult result{Table(cols), {}, kExitOk};
  for (int n = c.n_first; n <= c.n_last; ++n) {
    const int N = c.nodes_for(n);
    const HahnParams params(c.alpha, c.beta_value(), N);
    warn_range(result, n, N);
    const auto f = make_function(c.function, params);
    const auto approx = fit_hahn(f, n, params);
    const auto report = sup_error(f, approx);
    const bool hyp = params.is_symmetric() && c.alpha > -0.5 && hypothesis_holds(n, c.alpha, N);
    std::vector<Cell> row = {cell(f.name),          cell(n),          cell(N),
                             cell(c.alpha),         cell(c.beta_value()), cell(report.sup_error),
                             cell(report.argmax),   cell(report.bound), cell(report.ratio),
                             cell(hyp)};
    for (int k = 0; k <= c.n_last; ++k) {
      row.push_back(k <= n ? cell(approx.coefficients()[k]) : Cell(std::monostate{}));
    }
    result.table.add_row(std::move(row));
  }
  return result;
}

ExperimentResult cmd_bounds(const ExperimentConfig& c) {
  ExperimentResult result{Table({"n", "N", "alpha", "threshold", "hypothesis_ok", "D", "C", "ratio",
                                 "simplified", "node_min_c3", "node_min_c4"}),
                          {},
                          kExitOk};
  for (int n = c.n_first; n <= c.n_last; ++n) {
    const int N = c.nodes_for(n);
    if (n + 1 > N) {
      throw ConfigError("bounds: requires n + 1 <= N, got n=" + std::to_string(n) + " N=" + std::to_string(N));
    }
    const auto r = bound_report(n, N, c.alpha);
    result.table.add_row({cell(r.n), cell(r.N), cell(r.alpha), cell(r.threshold), cell(r.hypothesis_ok),
                          cell(r.D), cell(r.C), cell(r.ratio), cell(r.simplified), cell(r.node_min_c3),
                          cell(r.node_min_c4)});
  }
  return result;
}

ExperimentResult cmd_sharpness(const ExperimentConfig& c) {
  // Preconditions for every cell before any fitting.
  for (int n = c.n_first; n <= c.n_last; ++n) {
    const int N = c.nodes_for(n);
    if (!hypothesis_holds(n, c.alpha, N)) {
      throw ThresholdError("sharpness: n + 1 = " + std::to_string(n + 1) + " exceeds n(alpha, N) = " +
                           format_number(degree_threshold(c.alpha, N)) + " for N=" + std::to_string(N));
    }
  }
  ExperimentResult result{
      Table({"n", "N", "alpha", "threshold", "measured", "bound", "gap", "argmax"}), {}, kExitOk};
  for (int n = c.n_first; n <= c.n_last; ++n) {
    const int N = c.nodes_for(n);
    const auto params = HahnParams::symmetric(c.alpha, N);
    warn_range(result, n, N);
    const auto f = extremal_function(n, params);
    const auto report = sup_error(f, fit_hahn(f, n, params));
    const double bound = worst_case_constant(n, N, c.alpha);
    const double gap = std::abs(report.sup_error - bound) / bound;
    if (gap > kSharpnessTolerance) {
      result.status = kExitNumerical;
      result.warnings.push_back("sharpness gap " + format_number(gap) + " exceeds 1e-8 at n=" +
                                std::to_string(n) + " N=" + std::to_string(N));
    }
    result.table.add_row({cell(n), cell(N), cell(c.alpha), cell(degree_threshold(c.alpha, N)),
                          cell(report.sup_error), cell(bound), cell(gap), cell(report.argmax)});
  }
  return result;
}

ExperimentResult cmd_convergence(const ExperimentConfig& c) {
  ExperimentResult result{
      Table({"n", "N", "sup_error", "bound", "class_K_defect", "hypothesis_ok"}), {}, kExitOk};
  if (c.node_rule == NodeRule::c4 && c.alpha < 0.0) {
    result.warnings.push_back("node rule c4 is only guaranteed for alpha >= 0");
  }
  for (int n = c.n_first; n <= c.n_last; ++n) {
    const int N = c.nodes_for(n);
    const HahnParams params(c.alpha, c.beta_value(), N);
    warn_range(result, n, N);
    const auto f = make_function(c.function, params);
    if (!f.derivative_bound(n + 1)) {
      throw ConfigError("convergence: function '" + f.name + "' has no derivative bound of order " +
                        std::to_string(n + 1));
    }
    const auto report = sup_error(f, fit_hahn(f, n, params));
    const bool hyp = params.is_symmetric() && c.alpha > -0.5 && hypothesis_holds(n, c.alpha, N);
    std::optional<double> defect;
    if (c.alpha >= -0.5 && f.derivative_bound(n)) {
      defect = class_K_defect(f, n, c.alpha);
    }
    result.table.add_row({cell(n), cell(N), cell(report.sup_error), cell(report.bound), cell(defect),
                          cell(hyp)});
  }
  return result;
}

ExperimentResult cmd_compare(const ExperimentConfig& c) {
  ExperimentResult result{Table({"rule", "n", "N", "D", "C", "ratio", "hypothesis_ok"}), {}, kExitOk};
  auto add = [&](const std::string& rule, int n, int N) {
    if (!hypothesis_holds(n, c.alpha, N)) {
      throw ThresholdError("compare: n + 1 = " + std::to_string(n + 1) + " exceeds n(alpha, N) = " +
                           format_number(degree_threshold(c.alpha, N)) + " for N=" + std::to_string(N));
    }
    result.table.add_row({cell(rule), cell(n), cell(N), cell(worst_case_constant(n, N, c.alpha)),
                          cell(continuous_constant(n, c.alpha)), cell(ratio_discrete_continuous(n, N)),
                          cell(true)});
  };
  for (int n = c.n_first; n <= c.n_last; ++n) {
    add(to_string(c.node_rule), n, c.nodes_for(n));
  }
  // With N proportional to n^2 the ratio stays near exp(-1/20). Once n^2/N -> 0
  // it tends to 1, and faster node growth (n^4 against n^3) adds nothing.
  for (int n : {10, 20, 40}) {
    add("10n^2", n, 10 * n * n);
    add("n^3", n, n * n * n);
    add("n^4", n, n * n * n * n);
  }
  return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  switch (config.command) {
    case Command::basis: return cmd_basis(config);
    case Command::fit: return cmd_fit(config);
    case Command::bounds: return cmd_bounds(config);
    case Command::sharpness: return cmd_sharpness(config);
    case Command::convergence: return cmd_convergence(config);
    case Command::compare: return cmd_compare(config);
  }
  throw ConfigError("unknown command");
}

std::string render(const ExperimentResult& result, const ExperimentConfig& config) {
  std::ostringstream out;
  if (config.format == OutputFormat::csv) {
    write_csv(out, result.table);
  } else {
    write_json(out, result.table, config.to_json());
  }
  return out.str();
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ThresholdError*>(&e)) {
    return kExitThreshold;
  }
  if (dynamic_cast<const InstabilityError*>(&e)) {
    return kExitNumerical;
  }
  if (dynamic_cast<const Error*>(&e)) {
    return kExitConfig;
  }
  return 1;
}

}  // namespace hahn_lsq
