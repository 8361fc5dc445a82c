#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "stosched/cli/commands.hpp"
#include "stosched/simulate/engine.hpp"

namespace {

using stosched::cli::Settings;

struct Flags {
  std::optional<std::string> config, seed, instance, policy, mode, out, format, trace_out, metrics_out;
  std::optional<std::int64_t> N, m, trials, r_max;
  std::optional<double> delta, alpha, tau, kappa;
  std::optional<unsigned> threads;
  std::optional<int> t_max;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON config file (flags override it)");
  cmd->add_option("--seed", f.seed, "master seed (u64) or 'auto'");
  cmd->add_option("--trials", f.trials, "Monte Carlo trials");
  cmd->add_option("--out", f.out, "output path (default stdout)");
  cmd->add_option("--threads", f.threads, "worker threads (0 = all cores)");
  cmd->add_option("--N", f.N, "Bernoulli instance: long-job odds 1/N");
  cmd->add_option("--m", f.m, "machine count");
}

void add_policy(CLI::App* cmd, Flags& f) {
  cmd->add_option("--policy", f.policy, "list | lept-fix | single | lept-delta-alpha | lept-delta-alpha-practical");
  cmd->add_option("--mode", f.mode, "any | fixed | delta | shift");
  cmd->add_option("--delta", f.delta, "reassignment delay (default kappa*T/2)");
  cmd->add_option("--alpha", f.alpha, "checkpoint spacing factor (default 33)");
  cmd->add_option("--tau", f.tau, "shift period for --mode shift (default delta+alpha*T)");
  cmd->add_option("--kappa", f.kappa, "delta = kappa*T/2 when --delta is absent");
}

template <typename T, typename U>
void take(const std::optional<T>& flag, U& target) {
  if (flag) target = *flag;
}

Settings merge(const std::string& command, const std::string& name, const Flags& f) {
  Settings s;
  s.command = command;
  s.name = name;
  if (f.config) stosched::cli::apply_config_file(s, *f.config);
  if (!name.empty()) s.name = name;
  if (f.seed) stosched::cli::apply_seed(s, *f.seed);
  if (f.instance) {
    s.instance_path = *f.instance;
    s.instance_inline.reset();
  }
  take(f.N, s.N);
  take(f.m, s.m);
  take(f.policy, s.policy);
  take(f.mode, s.mode);
  take(f.delta, s.delta);
  take(f.alpha, s.alpha);
  take(f.tau, s.tau);
  take(f.kappa, s.kappa);
  take(f.trials, s.trials);
  take(f.out, s.out);
  take(f.threads, s.threads);
  take(f.r_max, s.r_max);
  take(f.t_max, s.t_max);
  take(f.format, s.format);
  take(f.trace_out, s.trace_out);
  take(f.metrics_out, s.metrics_out);
  if (s.seed_auto) s.seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
  return s;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  os << content;
  return static_cast<bool>(os);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic makespan scheduling under restricted adaptivity"};
  app.require_subcommand(1);
  Flags f;
  std::string name;

  auto* simulate = app.add_subcommand("simulate", "per-trial makespans of one policy");
  add_common(simulate, f);
  add_policy(simulate, f);
  simulate->add_option("--instance", f.instance, "instance JSON file (default: Bernoulli N, m)");
  simulate->add_option("--trace-out", f.trace_out, "write the trace of trial 0 as CSV");
  simulate->add_option("--metrics-out", f.metrics_out, "write checkpoint metrics of trial 0 as CSV");

  auto* dp = app.add_subcommand("dp", "exact cost-to-go table J*(r)");
  add_common(dp, f);
  dp->add_option("--r-max", f.r_max, "largest r (default N*m)");
  dp->add_option("--format", f.format, "csv | json");

  auto* verify = app.add_subcommand("verify", "run an invariant suite, JSON report");
  add_common(verify, f);
  verify->add_option("suite", name, "dominance | balancing | load-lemma | scaling | lambda");

  auto* experiment = app.add_subcommand("experiment", "run an experiment preset, CSV");
  add_common(experiment, f);
  add_policy(experiment, f);
  experiment->add_option("preset", name, "growth | squaring | policy-compare | xi-trajectory");

  auto* lambda = app.add_subcommand("lambda", "simulate the remaining-job fraction Lambda_t");
  add_common(lambda, f);
  lambda->add_option("--t-max", f.t_max, "last round (default 4)");

  auto* curves = app.add_subcommand("curves", "analytic reference curves, CSV");
  add_common(curves, f);
  curves->add_option("--alpha", f.alpha, "alpha for the constants (> 32)");
  curves->add_option("kind", name, "constants | bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto* chosen = app.get_subcommands().front();
  try {
    const Settings s = merge(chosen->get_name(), name, f);
    const auto result = stosched::cli::run_command(s);
    if (s.out) {
      if (!write_file(*s.out, result.text)) {
        std::cerr << "error: cannot write " << *s.out << '\n';
        return 2;
      }
    } else {
      std::cout << result.text;
    }
    for (const auto& [path, content] : result.files) {
      if (!write_file(path, content)) {
        std::cerr << "error: cannot write " << path << '\n';
        return 2;
      }
    }
    return result.exit_code;
  } catch (const stosched::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const stosched::sim::PolicyFault& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
