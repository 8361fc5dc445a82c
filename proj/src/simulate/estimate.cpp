#include "stosched/simulate/estimate.hpp"

#include <stdexcept>

#include "stosched/core/parallel.hpp"

namespace stosched::sim {

std::vector<double> simulate_makespans(const Instance& inst, const PolicyFactory& factory,
                                       AdaptivityClass mode, std::int64_t trials,
                                       std::uint64_t master_seed, unsigned threads) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  std::vector<double> out(static_cast<std::size_t>(trials));
  parallel_for(trials, threads, [&](std::int64_t t) {
    auto stream = RngStream::derive(master_seed, static_cast<std::uint64_t>(t));
    const auto real = sample_realization(inst, stream);
    auto policy = factory();
    out[static_cast<std::size_t>(t)] = makespan(run_policy(inst, real, *policy, mode));
  });
  return out;
}

SampleSummary estimate_expected_makespan(const Instance& inst, const PolicyFactory& factory,
                                         AdaptivityClass mode, std::int64_t trials,
                                         std::uint64_t master_seed, unsigned threads) {
  const auto values = simulate_makespans(inst, factory, mode, trials, master_seed, threads);
  return summarize(values);
}

}  // namespace stosched::sim
