#pragma once

#include <memory>
#include <span>
#include <vector>

#include "stosched/simulate/engine.hpp"

namespace stosched::sim {

using Queues = std::vector<std::vector<JobId>>;

/// LEPT order followed by list scheduling on expected durations: jobs sorted
/// by nonincreasing E[P_j] (ties by index), each placed on the machine with
/// the smallest expected load so far (ties by index). Queue order is
/// assignment order.
Queues lept_fix_assignment(const Instance& inst);

/// Same rule restricted to `jobs` and the machine ids in `targets`, all of
/// which start with zero load. Returned queues are indexed like `targets`.
Queues lept_fix_assignment(std::span<const double> expected, std::span<const JobId> jobs,
                           std::span<const MachineId> targets);

/// Outcome of checking l <= l_i <= n_i/(n_i-1) l on an assignment, where l_i
/// is machine i's expected load, n_i its job count and l the smallest l_i.
/// Machines with one job have no upper bound. Also checks that every machine
/// with two or more jobs has l_i <= 2 l.
struct LoadLemmaResult {
  bool holds = true;
  double ell = 0.0;
  MachineId machine = kUnassigned;  // first offending machine
  double load = 0.0;
  std::size_t count = 0;
};

LoadLemmaResult check_load_lemma(std::span<const double> expected, const Queues& queues,
                                 double tolerance = 1e-9);

/// T = 2 max{ (1/m) sum_j E[P_j], max_j E[P_j] }.
double compute_T(const Instance& inst);

/// k* = floor(log2((2/3) log2 m + 1)) + 2. Takes m as a real so that very
/// large machine counts (e.g. 2^96) can be evaluated. Throws for m < 2.
int compute_kstar(double m);

/// Adaptive list scheduling: whenever a machine is idle with nothing queued it
/// receives the lowest-index job not yet scheduled. Run it in mode any.
std::unique_ptr<Policy> list_scheduling_policy();

/// Fixed assignment given by lept_fix_assignment. Run it in mode fixed.
std::unique_ptr<Policy> lept_fix_policy();

/// Everything the checkpoint policy records at its decision points.
struct CheckpointRecord {
  double time = 0.0;
  int eligible = 0;  // machines eligible at this checkpoint
  bool skipped = false;  // no eligible machine: queues left untouched
  std::size_t moved = 0;
};

/// Options for the LEPT checkpoint policy.
struct LeptDeltaAlphaOptions {
  double delta = 1.0;
  double alpha = 33.0;
  /// Use every machine available at the checkpoint rather than only those
  /// available at all previous checkpoints.
  bool all_available_machines = false;
};

/// LEPT_FIX start; at tau_k = k (delta + alpha T), k = 1..k*+1, all jobs not
/// yet started are re-planned with LEPT_FIX onto the eligible machines and
/// stamped earliest start tau_k + delta. With no eligible machine the
/// checkpoint is skipped. Valid both as delta-delay and as
/// (delta + alpha T)-shift policy.
class LeptDeltaAlphaPolicy final : public Policy {
 public:
  explicit LeptDeltaAlphaPolicy(LeptDeltaAlphaOptions options);

  std::string name() const override { return "lept-delta-alpha"; }
  std::vector<std::vector<JobId>> initial_assignment(const Instance& inst) override;
  std::vector<double> decision_times(const Instance& inst) const override;
  PolicyAction on_decision_point(const Observation& obs) override;

  const LeptDeltaAlphaOptions& options() const { return options_; }
  const std::vector<CheckpointRecord>& checkpoints() const { return log_; }

 private:
  LeptDeltaAlphaOptions options_;
  std::vector<double> expected_;
  std::vector<double> times_;
  std::vector<char> eligible_;
  std::size_t next_ = 0;
  std::vector<CheckpointRecord> log_;
};

std::unique_ptr<Policy> lept_delta_alpha_policy(double delta, double alpha = 33.0,
                                                bool all_available_machines = false);

/// Checkpoint times tau_k = k (delta + alpha T) for k = 1..k*+1 (k* evaluated
/// at max(m, 2)).
std::vector<double> checkpoint_times(const Instance& inst, double delta, double alpha);

/// Puts every job on machine 0 in index order. Run it in mode fixed.
std::unique_ptr<Policy> single_machine_policy();

}  // namespace stosched::sim
