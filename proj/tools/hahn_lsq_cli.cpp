// hahn-lsq: discrete least-squares experiments on equidistant grids.
//
//   hahn-lsq <command> [--alpha R] [--beta R] [--n INT | --n-range A..B]
//            [--nodes INT | --node-rule c3|c4] [--function NAME]
//            [--format csv|json] [--out PATH] [--seed INT]

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "hahn_lsq/experiments.hpp"

namespace {

using hahn_lsq::ConfigError;
using hahn_lsq::ExperimentConfig;

struct RawOptions {
  double alpha = 0.0;
  std::optional<double> beta;
  std::optional<int> n;
  std::string n_range;
  std::optional<int> nodes;
  std::string node_rule;
  std::string function = "exp";
  std::string format = "csv";
  std::string out;
  std::optional<std::uint64_t> seed;
  int hat_points = 0;
};

void add_common_options(CLI::App* cmd, RawOptions& o) {
  cmd->add_option("--alpha", o.alpha, "Weight exponent alpha (> -1)");
  cmd->add_option("--beta", o.beta, "Weight exponent beta (defaults to alpha)");
  auto* n = cmd->add_option("--n", o.n, "Polynomial degree");
  auto* range = cmd->add_option("--n-range", o.n_range, "Degree range A..B");
  n->excludes(range);
  auto* nodes = cmd->add_option("--nodes,--N", o.nodes, "Grid size N (N+1 nodes)");
  auto* rule = cmd->add_option("--node-rule", o.node_rule, "Grid size from degree: c3 or c4")
                   ->check(CLI::IsMember({"c3", "c4", "explicit"}));
  nodes->excludes(rule);
  cmd->add_option("--function", o.function,
                  "const1, linear, poly:<c0,c1,...>, exp, sin<k>, runge, extremal:<n>");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "Write output to PATH instead of stdout");
  cmd->add_option("--seed", o.seed, "Seed recorded with the configuration");
  cmd->add_option("--hat-points", o.hat_points, "basis: tabulate normalized polynomials on this many intervals");
}

ExperimentConfig to_config(const std::string& command, const RawOptions& o) {
  ExperimentConfig c;
  c.command = *hahn_lsq::parse_command(command);
  c.alpha = o.alpha;
  c.beta = o.beta;
  if (o.n) {
    c.n_first = c.n_last = *o.n;
  } else if (!o.n_range.empty()) {
    const auto dots = o.n_range.find("..");
    if (dots == std::string::npos) {
      throw ConfigError("--n-range expects A..B, got '" + o.n_range + "'");
    }
    try {
      c.n_first = std::stoi(o.n_range.substr(0, dots));
      c.n_last = std::stoi(o.n_range.substr(dots + 2));
    } catch (const std::exception&) {
      throw ConfigError("--n-range expects integers A..B, got '" + o.n_range + "'");
    }
  } else {
    throw ConfigError("one of --n or --n-range is required");
  }
  c.nodes = o.nodes;
  if (!o.node_rule.empty()) {
    c.node_rule = *hahn_lsq::parse_node_rule(o.node_rule);
  }
  c.function = o.function;
  c.format = o.format == "json" ? hahn_lsq::OutputFormat::json : hahn_lsq::OutputFormat::csv;
  if (!o.out.empty()) {
    c.output_path = o.out;
  }
  c.seed = o.seed;
  c.hat_points = o.hat_points;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete least squares on equidistant nodes via Hahn polynomials"};
  app.require_subcommand(1);

  RawOptions options;
  const std::pair<const char*, const char*> commands[] = {
      {"basis", "Weights, Hahn polynomials, norms and orthogonality residuals"},
      {"fit", "Least-squares fit of a registry function with its error and bound"},
      {"bounds", "Worst-case constant, threshold and node rules"},
      {"sharpness", "Error of the extremal function against the worst-case constant"},
      {"convergence", "Error and bound as the degree grows under a node rule"},
      {"compare", "Discrete against continuous worst-case constants"},
  };
  for (const auto& [name, description] : commands) {
    add_common_options(app.add_subcommand(name, description), options);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hahn_lsq::kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const auto config = to_config(command, options);
    const auto result = hahn_lsq::run_experiment(config);
    for (const auto& w : result.warnings) {
      std::cerr << "hahn-lsq: " << w << '\n';
    }
    const auto text = hahn_lsq::render(result, config);
    if (config.output_path) {
      std::ofstream out(*config.output_path, std::ios::binary);
      if (!out) {
        std::cerr << "hahn-lsq: cannot open " << *config.output_path << '\n';
        return hahn_lsq::kExitConfig;
      }
      out << text;
    } else {
      std::cout << text;
    }
    return result.status;
  } catch (const std::exception& e) {
    std::cerr << "hahn-lsq " << command << ": " << e.what() << '\n';
    return hahn_lsq::exit_code_for(e);
  }
}
