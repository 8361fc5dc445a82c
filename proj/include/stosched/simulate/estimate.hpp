#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "stosched/core/stats.hpp"
#include "stosched/simulate/engine.hpp"

namespace stosched::sim {

/// Builds a fresh policy per trial (policies carry per-run state).
using PolicyFactory = std::function<std::unique_ptr<Policy>()>;

/// Makespan of trial t, run on the realization drawn from
/// RngStream::derive(master_seed, t).
std::vector<double> simulate_makespans(const Instance& inst, const PolicyFactory& factory,
                                       AdaptivityClass mode, std::int64_t trials,
                                       std::uint64_t master_seed, unsigned threads = 0);

/// Mean makespan with a normal-approximation 95% half-width. The result does
/// not depend on `threads`.
SampleSummary estimate_expected_makespan(const Instance& inst, const PolicyFactory& factory,
                                         AdaptivityClass mode, std::int64_t trials,
                                         std::uint64_t master_seed, unsigned threads = 0);

}  // namespace stosched::sim
