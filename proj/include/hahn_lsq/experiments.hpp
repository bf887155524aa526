#pragma once

// Experiment commands behind the hahn-lsq CLI. Each command turns a validated
// configuration into a deterministic table.

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "hahn_lsq/errors.hpp"
#include "hahn_lsq/table.hpp"

namespace hahn_lsq {

class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Command { basis, fit, bounds, sharpness, convergence, compare };
enum class NodeRule { explicit_nodes, c3, c4 };
enum class OutputFormat { csv, json };

/// Process exit codes used by the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitThreshold = 3,
  kExitNumerical = 4,
};

struct ExperimentConfig {
  Command command = Command::fit;
  double alpha = 0.0;
  std::optional<double> beta;  // defaults to alpha
  int n_first = 0;
  int n_last = 0;
  std::optional<int> nodes;
  NodeRule node_rule = NodeRule::explicit_nodes;
  std::string function = "exp";
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> output_path;
  std::optional<std::uint64_t> seed;
  int hat_points = 0;  // basis: also tabulate Qhat_k on this many [-1, 1] intervals

  double beta_value() const { return beta.value_or(alpha); }

  /// Grid size for degree n under the configured node rule.
  int nodes_for(int n) const;

  /// Throws ConfigError naming the violated precondition.
  void validate() const;

  nlohmann::ordered_json to_json() const;
};

struct ExperimentResult {
  Table table;
  std::vector<std::string> warnings;
  int status = kExitOk;
};

std::string to_string(Command c);
std::optional<Command> parse_command(const std::string& name);
std::string to_string(NodeRule r);
std::optional<NodeRule> parse_node_rule(const std::string& name);

ExperimentResult cmd_basis(const ExperimentConfig& config);
ExperimentResult cmd_fit(const ExperimentConfig& config);
ExperimentResult cmd_bounds(const ExperimentConfig& config);
ExperimentResult cmd_sharpness(const ExperimentConfig& config);
ExperimentResult cmd_convergence(const ExperimentConfig& config);
ExperimentResult cmd_compare(const ExperimentConfig& config);

/// Validates and dispatches on config.command.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Render a result in the configured format.
std::string render(const ExperimentResult& result, const ExperimentConfig& config);

/// Exit code for an exception escaping an experiment.
int exit_code_for(const std::exception& e);

/// Relative gap allowed between the measured extremal error and D_{n,N}.
inline constexpr double kSharpnessTolerance = 1e-8;

}  // namespace hahn_lsq
