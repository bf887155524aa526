#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>

#include "hahn_lsq/bounds.hpp"
#include "hahn_lsq/experiments.hpp"
#include "hahn_lsq/functions.hpp"
#include "hahn_lsq/hahn.hpp"
#include "hahn_lsq/jacobi.hpp"
#include "hahn_lsq/lsq.hpp"
#include "hahn_lsq/specfun.hpp"

namespace py = pybind11;
using namespace hahn_lsq;

namespace {

// A registry name or a plain Python callable (no derivative bounds).
using FunctionArg = std::variant<std::string, std::function<double(double)>>;

FunctionSpec resolve(const FunctionArg& f, const HahnParams& params) {
  if (const auto* name = std::get_if<std::string>(&f)) {
    return make_function(*name, params);
  }
  return FunctionSpec{"callable", std::get<std::function<double(double)>>(f), {}};
}

py::dict to_dict(const BoundReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["N"] = r.N;
  d["alpha"] = r.alpha;
  d["threshold"] = r.threshold;
  d["hypothesis_ok"] = r.hypothesis_ok;
  d["D"] = r.D;
  d["C"] = r.C;
  d["ratio"] = r.ratio;
  d["simplified"] = r.simplified;
  d["node_min_c3"] = r.node_min_c3;
  d["node_min_c4"] = r.node_min_c4;
  return d;
}

std::string experiment(const std::string& command, double alpha, std::optional<double> beta, std::optional<int> n,
                       std::optional<std::pair<int, int>> n_range, std::optional<int> nodes,
                       std::optional<std::string> node_rule, const std::string& function, const std::string& format) {
  ExperimentConfig c;
  const auto cmd = parse_command(command);
  if (!cmd) {
    throw ConfigError("unknown command '" + command + "'");
  }
  c.command = *cmd;
  c.alpha = alpha;
  c.beta = beta;
  if (n && n_range) {
    throw ConfigError("give n or n_range, not both");
  }
  if (n) {
    c.n_first = c.n_last = *n;
  } else if (n_range) {
    c.n_first = n_range->first;
    c.n_last = n_range->second;
  } else {
    throw ConfigError("one of n or n_range is required");
  }
  c.nodes = nodes;
  if (node_rule) {
    const auto rule = parse_node_rule(*node_rule);
    if (!rule) {
      throw ConfigError("unknown node rule '" + *node_rule + "'");
    }
    c.node_rule = *rule;
  }
  c.function = function;
  if (format != "csv" && format != "json") {
    throw ConfigError("format must be csv or json");
  }
  c.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  return render(run_experiment(c), c);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Discrete least squares on equidistant grids with Hahn polynomials";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<DegreeError>(m, "DegreeError", base.ptr());
  py::register_exception<IndexError>(m, "IndexError", base.ptr());
  py::register_exception<LengthError>(m, "LengthError", base.ptr());
  py::register_exception<ThresholdError>(m, "ThresholdError", base.ptr());
  py::register_exception<InstabilityError>(m, "InstabilityError", base.ptr());
  py::register_exception<MissingBoundError>(m, "MissingBoundError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  m.def("log_gamma", &log_gamma, py::arg("x"));
  m.def("pochhammer", &pochhammer, py::arg("a"), py::arg("k"));
  m.def("gen_binomial", &gen_binomial, py::arg("a"), py::arg("k"));
  m.def(
      "stirling_sandwich",
      [](int n) {
        const auto s = stirling_sandwich(n);
        return py::make_tuple(s.lower(), s.value(), s.upper());
      },
      py::arg("n"), "(lower, value, upper) for 2^n n!/(2n)!");
  m.def("gamma_ratio_residual", &gamma_ratio_residual, py::arg("a"), py::arg("b"), py::arg("N"));

  py::class_<HahnParams>(m, "HahnParams")
      .def(py::init<double, double, int>(), py::arg("alpha"), py::arg("beta"), py::arg("N"))
      .def_static("symmetric", &HahnParams::symmetric, py::arg("alpha"), py::arg("N"))
      .def_property_readonly("alpha", &HahnParams::alpha)
      .def_property_readonly("beta", &HahnParams::beta)
      .def_property_readonly("N", &HahnParams::N)
      .def("__eq__", [](const HahnParams& a, const HahnParams& b) { return a == b; })
      .def("__repr__", [](const HahnParams& p) {
        return "HahnParams(alpha=" + format_number(p.alpha()) + ", beta=" + format_number(p.beta()) +
               ", N=" + std::to_string(p.N()) + ")";
      });

  m.def("weight", &weight, py::arg("i"), py::arg("params"));
  m.def(
      "weights",
      [](const HahnParams& p) {
        const DiscreteWeight w(p);
        return std::vector<double>(w.values().begin(), w.values().end());
      },
      py::arg("params"));
  m.def("hahn_eval", &hahn_eval, py::arg("n"), py::arg("x"), py::arg("params"));
  m.def("hahn_eval_recurrence", &hahn_eval_recurrence, py::arg("n"), py::arg("x"), py::arg("params"));
  m.def("hahn_norm_sq", &hahn_norm_sq, py::arg("k"), py::arg("params"));
  m.def("normalized_hahn_eval", &normalized_hahn_eval, py::arg("k"), py::arg("t"), py::arg("params"));
  m.def("endpoint_max_check", &endpoint_max_check, py::arg("n"), py::arg("alpha"), py::arg("N"));

  m.def(
      "jacobi_eval", [](int n, double x, double a, double b) { return jacobi_eval(n, x, JacobiParams(a, b)); },
      py::arg("n"), py::arg("x"), py::arg("alpha"), py::arg("beta"));
  m.def(
      "jacobi_norm_sq", [](int n, double a, double b) { return jacobi_norm_sq(n, JacobiParams(a, b)); },
      py::arg("n"), py::arg("alpha"), py::arg("beta"));
  m.def(
      "jacobi_sup", [](int n, double a, double b) { return jacobi_sup(n, JacobiParams(a, b)); }, py::arg("n"),
      py::arg("alpha"), py::arg("beta"));
  m.def("continuous_constant", &continuous_constant, py::arg("n"), py::arg("alpha"));

  m.def("degree_threshold", &degree_threshold, py::arg("alpha"), py::arg("N"));
  m.def("hypothesis_holds", &hypothesis_holds, py::arg("n"), py::arg("alpha"), py::arg("N"));
  m.def("worst_case_constant", &worst_case_constant, py::arg("n"), py::arg("N"), py::arg("alpha"));
  m.def("simplified_constant", &simplified_constant, py::arg("n"), py::arg("alpha"));
  m.def("ratio_discrete_continuous", &ratio_discrete_continuous, py::arg("n"), py::arg("N"));
  m.def(
      "alpha0_constant",
      [](int n) {
        const auto c = alpha0_constant(n);
        return py::make_tuple(c.D, c.d, c.exact);
      },
      py::arg("n"), "(D_n, d_n, exact constant 2^{n+1}(n+1)!/(2n+2)!)");
  m.def(
      "min_nodes",
      [](int n, double alpha) {
        const auto r = min_nodes(n, alpha);
        return py::make_tuple(r.c3, r.c4);
      },
      py::arg("n"), py::arg("alpha"));
  m.def(
      "bound_report", [](int n, int N, double alpha) { return to_dict(bound_report(n, N, alpha)); }, py::arg("n"),
      py::arg("N"), py::arg("alpha"));

  py::class_<Approximant>(m, "Approximant")
      .def(py::init<HahnParams, std::vector<double>>(), py::arg("params"), py::arg("coefficients"))
      .def_property_readonly("params", &Approximant::params)
      .def_property_readonly("degree", &Approximant::degree)
      .def_property_readonly("coefficients",
                             [](const Approximant& a) {
                               return std::vector<double>(a.coefficients().begin(), a.coefficients().end());
                             })
      .def_property_readonly("in_validated_range", &Approximant::in_validated_range)
      .def("__call__", &evaluate, py::arg("t"));

  m.def(
      "fit", [](const FunctionArg& f, int n, const HahnParams& p) { return fit_hahn(resolve(f, p), n, p); },
      py::arg("function"), py::arg("n"), py::arg("params"));
  m.def(
      "fit_samples",
      [](const std::vector<double>& samples, int n, const HahnParams& p) { return fit_hahn_samples(samples, n, p); },
      py::arg("samples"), py::arg("n"), py::arg("params"));
  m.def(
      "fit_normal_equations",
      [](const FunctionArg& f, int n, const HahnParams& p) { return fit_normal_equations(resolve(f, p), n, p); },
      py::arg("function"), py::arg("n"), py::arg("params"));
  m.def(
      "sup_error",
      [](const FunctionArg& f, const Approximant& a) {
        const ErrorReport r = sup_error(resolve(f, a.params()), a);
        py::dict d;
        d["sup_error"] = r.sup_error;
        d["argmax"] = r.argmax;
        d["bound"] = r.bound;
        d["ratio"] = r.ratio;
        return d;
      },
      py::arg("function"), py::arg("approximant"));
  m.def(
      "extremal_function",
      [](int n, const HahnParams& p) {
        return std::function<double(double)>(extremal_function(n, p).evaluator);
      },
      py::arg("n"), py::arg("params"));
  m.def(
      "class_K_defect",
      [](const std::string& name, int n, double alpha) {
        return class_K_defect(make_function(name, HahnParams(0, 0, 1)), n, alpha);
      },
      py::arg("function"), py::arg("n"), py::arg("alpha"));

  m.def("experiment", &experiment, py::arg("command"), py::arg("alpha") = 0.0, py::arg("beta") = py::none(),
        py::arg("n") = py::none(), py::arg("n_range") = py::none(), py::arg("nodes") = py::none(),
        py::arg("node_rule") = py::none(), py::arg("function") = "exp", py::arg("format") = "csv",
        "Run a CLI experiment and return its CSV or JSON text");
}
