#include "stosched/core/instance.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace stosched {

Instance::Instance(int machines, std::vector<Dist> jobs)
    : machines_(machines), jobs_(std::move(jobs)) {
  if (machines_ < 1) throw std::invalid_argument("Instance: need at least one machine");
}

std::vector<double> Instance::expectations() const {
  std::vector<double> e;
  e.reserve(jobs_.size());
  for (const auto& d : jobs_) e.push_back(d.expected_value());
  return e;
}

double Instance::total_expected_load() const {
  // Neumaier summation: I_N sums N*m copies of 1/N.
  double total = 0.0, carry = 0.0;
  for (const auto& d : jobs_) {
    const double x = d.expected_value();
    const double t = total + x;
    carry += std::abs(total) >= std::abs(x) ? (total - t) + x : (x - t) + total;
    total = t;
  }
  return total + carry;
}

Instance bernoulli_instance(std::int64_t N, std::int64_t m) {
  if (N < 1 || m < 1) throw std::invalid_argument("bernoulli_instance: N and m must be >= 1");
  if (m > std::numeric_limits<int>::max() || N * m > std::numeric_limits<int>::max())
    throw std::invalid_argument("bernoulli_instance: instance too large");
  const Dist law = Dist::bernoulli(1.0 / static_cast<double>(N));
  return Instance(static_cast<int>(m), std::vector<Dist>(static_cast<std::size_t>(N * m), law));
}

Realization sample_realization(const Instance& inst, RngStream& stream) {
  Realization r;
  r.p.reserve(static_cast<std::size_t>(inst.jobs()));
  for (const auto& law : inst.job_laws()) {
    // Always consume one draw per job so streams stay aligned across laws.
    const double u = stream.uniform();
    r.p.push_back(law.deterministic() ? law.max_value() : law.quantile(u));
  }
  return r;
}

bool consistent(const Instance& inst, const Realization& real) {
  if (static_cast<int>(real.p.size()) != inst.jobs()) return false;
  for (JobId j = 0; j < inst.jobs(); ++j)
    if (!inst.job(j).in_support(real.p[static_cast<std::size_t>(j)])) return false;
  return true;
}

Instance random_instance(RngStream& stream, int max_jobs, int max_machines, int max_atoms) {
  if (max_jobs < 1 || max_machines < 1 || max_atoms < 1)
    throw std::invalid_argument("random_instance: limits must be positive");
  auto pick = [&](int hi) { return 1 + static_cast<int>(stream.next_u64() % static_cast<std::uint64_t>(hi)); };
  const int m = pick(max_machines);
  const int n = pick(max_jobs);
  std::vector<Dist> jobs;
  jobs.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int atoms = pick(max_atoms);
    std::vector<double> w(static_cast<std::size_t>(atoms));
    for (auto& x : w) x = 0.05 + stream.uniform();
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    std::vector<Dist::Atom> support;
    double used = 0.0;
    for (int a = 0; a < atoms; ++a) {
      const double value = std::round(stream.uniform() * 1000.0) / 100.0;
      const double prob = a + 1 == atoms ? 1.0 - used : w[static_cast<std::size_t>(a)] / total;
      used += prob;
      support.push_back({value, prob});
    }
    jobs.emplace_back(std::move(support));
  }
  return Instance(m, std::move(jobs));
}

}  // namespace stosched
