#pragma once

#include <cstdint>
#include <vector>

#include "stosched/core/dist.hpp"
#include "stosched/core/rng.hpp"

namespace stosched {

using JobId = int;
using MachineId = int;

/// m identical machines and one processing-time law per job.
class Instance {
 public:
  /// Throws std::invalid_argument when machines < 1. An empty job list is
  /// accepted; every schedule of it has makespan 0.
  Instance(int machines, std::vector<Dist> jobs);

  int machines() const { return machines_; }
  int jobs() const { return static_cast<int>(jobs_.size()); }
  const Dist& job(JobId j) const { return jobs_[static_cast<std::size_t>(j)]; }
  const std::vector<Dist>& job_laws() const { return jobs_; }

  double expected(JobId j) const { return job(j).expected_value(); }
  std::vector<double> expectations() const;
  double total_expected_load() const;

 private:
  int machines_;
  std::vector<Dist> jobs_;
};

/// The lower-bound instance: N*m jobs, each Bernoulli(1/N) on {0, 1}.
Instance bernoulli_instance(std::int64_t N, std::int64_t m);

/// Random test instance: 1..max_jobs jobs on 1..max_machines machines, each
/// job with 1..max_atoms atoms at values in [0, 10] (two decimals).
Instance random_instance(RngStream& stream, int max_jobs, int max_machines, int max_atoms = 4);

/// One sampled processing time per job.
struct Realization {
  std::vector<double> p;
};

/// Draws every job independently by inverse CDF, in job order, from `stream`.
Realization sample_realization(const Instance& inst, RngStream& stream);

/// True when the realization has the right length and every duration lies in
/// the support of its job's law.
bool consistent(const Instance& inst, const Realization& real);

}  // namespace stosched
