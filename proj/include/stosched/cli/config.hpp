#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace stosched::cli {

/// Bad flags, bad config, unknown names: exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything a command can read. Unset optionals fall back to
/// command-specific defaults.
struct Settings {
  std::string command;
  std::string name;  // experiment preset, verify suite or curves kind

  std::optional<std::string> instance_path;
  std::optional<nlohmann::json> instance_inline;
  std::optional<std::int64_t> N;
  std::optional<std::int64_t> m;

  std::string policy = "list";
  std::optional<std::string> mode;
  std::optional<double> delta;
  std::optional<double> tau;
  double alpha = 33.0;
  double kappa = 1.0;

  std::optional<std::int64_t> trials;
  std::optional<std::uint64_t> seed;
  bool seed_auto = false;
  std::optional<std::string> out;
  unsigned threads = 0;

  std::optional<std::int64_t> r_max;
  std::optional<int> t_max;
  std::string format = "csv";
  std::optional<std::string> trace_out;
  std::optional<std::string> metrics_out;
};

/// Applies the keys of a JSON config object on top of `s`. Accepted keys:
/// experiment, suite, kind, instance (path string or inline object), N, m,
/// policy, mode, delta, alpha, tau, kappa, trials, seed (integer or "auto"),
/// out, threads, r_max, t_max, format. Unknown keys are a UsageError.
void apply_json(Settings& s, const nlohmann::json& config);

/// Reads and applies a config file.
void apply_config_file(Settings& s, const std::string& path);

/// Parses "--seed" values: a decimal u64 or "auto".
void apply_seed(Settings& s, const std::string& text);

/// The seed of a randomized command; UsageError when none was given.
std::uint64_t require_seed(const Settings& s);

}  // namespace stosched::cli
