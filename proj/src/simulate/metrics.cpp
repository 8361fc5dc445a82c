#include "stosched/simulate/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "stosched/core/dist.hpp"
#include "stosched/simulate/policies.hpp"

namespace stosched::sim {

namespace {

bool same_time(double a, double b) {
  return std::abs(a - b) <= kTimeTolerance * std::max(1.0, std::abs(b));
}

}  // namespace

CheckpointMetrics checkpoint_metrics(const ScheduleTrace& trace, const Instance& inst, double delta,
                                     double alpha) {
  const std::size_t n = static_cast<std::size_t>(inst.jobs());
  const int m = inst.machines();
  if (trace.placements.size() != n || trace.machines != m)
    throw std::invalid_argument("checkpoint_metrics: trace does not belong to this instance");

  const auto taus = checkpoint_times(inst, delta, alpha);
  // The engine stops visiting checkpoints once every job has completed.
  if (trace.decision_times.size() > taus.size())
    throw std::invalid_argument("checkpoint_metrics: trace has more checkpoints than (delta, alpha) gives");
  for (std::size_t k = 0; k < trace.decision_times.size(); ++k)
    if (!same_time(trace.decision_times[k], taus[k]))
      throw std::invalid_argument("checkpoint_metrics: checkpoint times do not match delta and alpha");
  for (const auto& ev : trace.reassignments) {
    bool on_grid = false;
    for (double t : taus) on_grid = on_grid || same_time(ev.time, t);
    if (!on_grid) throw std::invalid_argument("checkpoint_metrics: reassignment outside the checkpoints");
  }

  const double T = compute_T(inst);
  const auto expected = inst.expectations();

  // Machine whose queue holds job j just before time t.
  std::vector<MachineId> holder(n, kUnassigned);
  for (std::size_t i = 0; i < trace.initial_queues.size(); ++i)
    for (JobId j : trace.initial_queues[i]) holder[static_cast<std::size_t>(j)] = static_cast<MachineId>(i);
  std::size_t next_event = 0;

  CheckpointMetrics out;
  out.times.push_back(0.0);
  out.xi.push_back(1.0);
  out.a.push_back(1.0);
  std::vector<char> always_idle(static_cast<std::size_t>(m), 1);

  for (double tau : taus) {
    while (next_event < trace.reassignments.size() && trace.reassignments[next_event].time < tau &&
           !same_time(trace.reassignments[next_event].time, tau)) {
      const auto& ev = trace.reassignments[next_event++];
      holder[static_cast<std::size_t>(ev.job)] = ev.to_machine;
    }
    std::vector<char> busy(static_cast<std::size_t>(m), 0);
    double remaining = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& pl = trace.placements[j];
      const bool started_before = pl.start < tau && !same_time(pl.start, tau);
      if (!started_before) {
        remaining += expected[j];
        if (holder[j] != kUnassigned) busy[static_cast<std::size_t>(holder[j])] = 1;
      } else if (pl.completion > tau && !same_time(pl.completion, tau)) {
        busy[static_cast<std::size_t>(pl.machine)] = 1;
      }
    }
    int idle = 0;
    for (int i = 0; i < m; ++i) {
      auto& flag = always_idle[static_cast<std::size_t>(i)];
      flag = flag && !busy[static_cast<std::size_t>(i)];
      idle += flag;
    }
    out.times.push_back(tau);
    out.xi.push_back(T > 0.0 ? remaining / (T * m) : 0.0);
    out.a.push_back(static_cast<double>(idle) / m);
  }
  return out;
}

}  // namespace stosched::sim
