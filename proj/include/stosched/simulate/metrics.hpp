#pragma once

#include <vector>

#include "stosched/core/instance.hpp"
#include "stosched/core/trace.hpp"

namespace stosched::sim {

/// Xi_k and A_k at the checkpoints of the LEPT checkpoint policy. Index 0 is
/// the start (xi[0] = a[0] = 1 by convention); index k is tau_k for
/// k = 1..k*+1.
struct CheckpointMetrics {
  std::vector<double> times;  // times[0] = 0
  std::vector<double> xi;     // expected load not started before tau_k, over T m
  std::vector<double> a;      // fraction of machines idle at every tau_1..tau_k
};

/// Recomputes the metrics from a trace of lept_delta_alpha_policy(delta, alpha).
/// A machine is idle at tau when nothing runs on it across tau and nothing is
/// queued on it just before tau. Throws std::invalid_argument when the trace's
/// decision points are not a prefix of the checkpoints of (delta, alpha) or a
/// reassignment happens off them.
CheckpointMetrics checkpoint_metrics(const ScheduleTrace& trace, const Instance& inst, double delta,
                                     double alpha);

}  // namespace stosched::sim
