#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stosched/cli/config.hpp"

namespace stosched::cli {

inline constexpr int kSchemaVersion = 1;

/// Result of a command. `text` is the main output (CSV or JSON); `files` are
/// extra outputs requested by flags, as (path, content).
struct CommandOutput {
  int exit_code = 0;  // 0 success, 1 a check failed
  std::string text;
  std::vector<std::pair<std::string, std::string>> files;
};

/// Per-trial makespans of one policy, followed by mean, ci95_half_width, min
/// and max rows.
CommandOutput cmd_simulate(const Settings& s);

/// (r, J*(r)) for the Bernoulli instance, CSV or JSON.
CommandOutput cmd_dp(const Settings& s);

/// Suites: dominance, balancing, load-lemma, scaling, lambda. JSON report.
CommandOutput cmd_verify(const Settings& s);

/// Presets: growth, squaring, policy-compare, xi-trajectory.
CommandOutput cmd_experiment(const Settings& s);

/// Lambda_t summary (mean, quantiles, tail frequency against the bound).
CommandOutput cmd_lambda(const Settings& s);

/// Analytic curves: constants (k, gamma_k, beta_k) or bounds.
CommandOutput cmd_curves(const Settings& s);

/// Dispatches on s.command.
CommandOutput run_command(const Settings& s);

}  // namespace stosched::cli
