#include "stosched/simulate/policies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace stosched::sim {

Queues lept_fix_assignment(std::span<const double> expected, std::span<const JobId> jobs,
                           std::span<const MachineId> targets) {
  Queues queues(targets.size());
  if (targets.empty()) return queues;
  std::vector<JobId> order(jobs.begin(), jobs.end());
  std::stable_sort(order.begin(), order.end(), [&](JobId a, JobId b) {
    const double ea = expected[static_cast<std::size_t>(a)];
    const double eb = expected[static_cast<std::size_t>(b)];
    if (ea != eb) return ea > eb;
    return a < b;
  });
  // (load, slot) min-heap; ties go to the lower slot.
  using Slot = std::pair<double, std::size_t>;
  std::priority_queue<Slot, std::vector<Slot>, std::greater<>> loads;
  for (std::size_t s = 0; s < targets.size(); ++s) loads.push({0.0, s});
  for (JobId j : order) {
    auto [load, slot] = loads.top();
    loads.pop();
    queues[slot].push_back(j);
    loads.push({load + expected[static_cast<std::size_t>(j)], slot});
  }
  return queues;
}

Queues lept_fix_assignment(const Instance& inst) {
  const auto expected = inst.expectations();
  std::vector<JobId> jobs(static_cast<std::size_t>(inst.jobs()));
  std::iota(jobs.begin(), jobs.end(), 0);
  std::vector<MachineId> machines(static_cast<std::size_t>(inst.machines()));
  std::iota(machines.begin(), machines.end(), 0);
  return lept_fix_assignment(expected, jobs, machines);
}

LoadLemmaResult check_load_lemma(std::span<const double> expected, const Queues& queues,
                                 double tolerance) {
  LoadLemmaResult out;
  if (queues.empty()) return out;
  std::vector<double> loads;
  for (const auto& q : queues) {
    double l = 0.0;
    for (JobId j : q) l += expected[static_cast<std::size_t>(j)];
    loads.push_back(l);
  }
  out.ell = *std::min_element(loads.begin(), loads.end());
  for (std::size_t i = 0; i < queues.size(); ++i) {
    const double l = loads[i];
    const std::size_t n = queues[i].size();
    bool ok = l >= out.ell - tolerance;
    if (n >= 2) {
      const double factor = static_cast<double>(n) / static_cast<double>(n - 1);
      ok = ok && l <= factor * out.ell + tolerance && l <= 2.0 * out.ell + tolerance;
    }
    if (!ok) {
      out.holds = false;
      out.machine = static_cast<MachineId>(i);
      out.load = l;
      out.count = n;
      return out;
    }
  }
  return out;
}

double compute_T(const Instance& inst) {
  double max_e = 0.0;
  for (const auto& d : inst.job_laws()) max_e = std::max(max_e, d.expected_value());
  return 2.0 * std::max(inst.total_expected_load() / inst.machines(), max_e);
}

int compute_kstar(double m) {
  if (!(m >= 2.0)) throw std::domain_error("k* needs m >= 2");
  return static_cast<int>(std::floor(std::log2((2.0 / 3.0) * std::log2(m) + 1.0))) + 2;
}

std::vector<double> checkpoint_times(const Instance& inst, double delta, double alpha) {
  const int kstar = compute_kstar(std::max(2, inst.machines()));
  const double period = delta + alpha * compute_T(inst);
  std::vector<double> times;
  for (int k = 1; k <= kstar + 1; ++k) times.push_back(k * period);
  return times;
}

namespace {

class ListScheduling final : public Policy {
 public:
  std::string name() const override { return "list"; }

  std::vector<std::vector<JobId>> initial_assignment(const Instance& inst) override {
    jobs_ = inst.jobs();
    cursor_ = 0;
    return {};
  }

  bool wants_starved_callbacks() const override { return true; }

  PolicyAction on_machine_starved(const Observation& obs, MachineId i) override {
    while (cursor_ < jobs_ && (obs.status(cursor_) != JobStatus::not_started ||
                               obs.queued_on(cursor_) != kUnassigned))
      ++cursor_;
    if (cursor_ >= jobs_) return {};
    return {{{cursor_++, i, 0, std::nullopt}}};
  }

 private:
  JobId jobs_ = 0;
  JobId cursor_ = 0;
};

class FixedAssignment final : public Policy {
 public:
  enum class Rule { lept, single_machine };
  explicit FixedAssignment(Rule rule) : rule_(rule) {}

  std::string name() const override { return rule_ == Rule::lept ? "lept-fix" : "single-machine"; }

  std::vector<std::vector<JobId>> initial_assignment(const Instance& inst) override {
    if (rule_ == Rule::lept) return lept_fix_assignment(inst);
    Queues q(1);
    q[0].resize(static_cast<std::size_t>(inst.jobs()));
    std::iota(q[0].begin(), q[0].end(), 0);
    return q;
  }

 private:
  Rule rule_;
};

}  // namespace

std::unique_ptr<Policy> list_scheduling_policy() { return std::make_unique<ListScheduling>(); }

std::unique_ptr<Policy> lept_fix_policy() {
  return std::make_unique<FixedAssignment>(FixedAssignment::Rule::lept);
}

std::unique_ptr<Policy> single_machine_policy() {
  return std::make_unique<FixedAssignment>(FixedAssignment::Rule::single_machine);
}

LeptDeltaAlphaPolicy::LeptDeltaAlphaPolicy(LeptDeltaAlphaOptions options) : options_(options) {
  if (!(options_.delta > 0.0)) throw std::invalid_argument("lept-delta-alpha: delta must be positive");
  if (!(options_.alpha > 0.0)) throw std::invalid_argument("lept-delta-alpha: alpha must be positive");
}

std::vector<std::vector<JobId>> LeptDeltaAlphaPolicy::initial_assignment(const Instance& inst) {
  expected_ = inst.expectations();
  times_ = checkpoint_times(inst, options_.delta, options_.alpha);
  eligible_.assign(static_cast<std::size_t>(inst.machines()), 1);
  next_ = 0;
  log_.clear();
  return lept_fix_assignment(inst);
}

std::vector<double> LeptDeltaAlphaPolicy::decision_times(const Instance& inst) const {
  return checkpoint_times(inst, options_.delta, options_.alpha);
}

PolicyAction LeptDeltaAlphaPolicy::on_decision_point(const Observation& obs) {
  CheckpointRecord rec;
  rec.time = obs.now();
  ++next_;

  std::vector<MachineId> targets;
  for (MachineId i = 0; i < obs.machines(); ++i) {
    auto& flag = eligible_[static_cast<std::size_t>(i)];
    const bool free_now = obs.available(i);
    flag = options_.all_available_machines ? free_now : (flag && free_now);
    if (flag) targets.push_back(i);
  }
  rec.eligible = static_cast<int>(targets.size());

  PolicyAction action;
  const auto pending = obs.not_started();
  if (targets.empty()) {
    rec.skipped = true;
  } else if (!pending.empty()) {
    const auto plan = lept_fix_assignment(expected_, pending, targets);
    const double release = obs.now() + options_.delta;
    for (std::size_t s = 0; s < plan.size(); ++s)
      for (std::size_t pos = 0; pos < plan[s].size(); ++pos)
        action.reassignments.push_back({plan[s][pos], targets[s], pos, release});
  }
  rec.moved = action.reassignments.size();
  log_.push_back(rec);
  return action;
}

std::unique_ptr<Policy> lept_delta_alpha_policy(double delta, double alpha, bool all_available_machines) {
  return std::make_unique<LeptDeltaAlphaPolicy>(LeptDeltaAlphaOptions{delta, alpha, all_available_machines});
}

}  // namespace stosched::sim
