#include "stosched/simulate/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

namespace stosched::sim {

namespace {

struct Event {
  double time;
  MachineId machine;
  bool completion;  // false: wake-up for an earliest-start stamp
  bool operator>(const Event& o) const {
    return std::tie(time, machine, completion) > std::tie(o.time, o.machine, o.completion);
  }
};

struct MachineState {
  std::vector<JobId> queue;  // queue[head..] are waiting
  std::size_t head = 0;
  std::optional<RunningJob> running;
  double running_end = 0.0;

  std::span<const JobId> waiting() const {
    return std::span<const JobId>(queue).subspan(head);
  }
  bool empty() const { return head == queue.size(); }
};

}  // namespace

class Engine {
 public:
  Engine(const Instance& inst, const Realization& real, Policy& policy, AdaptivityClass mode)
      : inst_(inst), real_(real), policy_(policy), mode_(mode),
        n_(static_cast<std::size_t>(inst.jobs())),
        status_(n_, JobStatus::not_started),
        queued_on_(n_, kUnassigned),
        stamp_(n_, 0.0),
        machines_(static_cast<std::size_t>(inst.machines())) {
    trace_.machines = inst.machines();
    trace_.placements.assign(n_, Placement{});
  }

  ScheduleTrace run();

 private:
  friend class Observation;

  [[noreturn]] void fault(const std::string& what) const {
    std::ostringstream os;
    os << "policy '" << policy_.name() << "' at t=" << now_ << ": " << what;
    throw PolicyFault(os.str());
  }
  MachineState& machine(MachineId i) { return machines_[static_cast<std::size_t>(i)]; }
  const MachineState& machine(MachineId i) const { return machines_[static_cast<std::size_t>(i)]; }

  void install_initial_assignment();
  void apply(const PolicyAction& action);
  void remove_from_queue(JobId j);
  void dispatch();
  void process_machine(MachineId i);
  void finish(MachineId i);

  const Instance& inst_;
  const Realization& real_;
  Policy& policy_;
  AdaptivityClass mode_;
  std::size_t n_;

  double now_ = 0.0;
  std::vector<JobStatus> status_;
  std::vector<MachineId> queued_on_;
  std::vector<double> stamp_;
  std::vector<MachineState> machines_;
  std::vector<JobId> completed_;
  std::size_t started_count_ = 0;

  std::priority_queue<Event, std::vector<Event>, std::greater<>> events_;
  std::set<MachineId> dirty_;
  ScheduleTrace trace_;
};

// ---------------------------------------------------------------------------
// Observation

double Observation::now() const { return engine_->now_; }
int Observation::machines() const { return engine_->inst_.machines(); }
int Observation::jobs() const { return engine_->inst_.jobs(); }

JobStatus Observation::status(JobId j) const { return engine_->status_.at(static_cast<std::size_t>(j)); }

double Observation::expected(JobId j) const { return engine_->inst_.expected(j); }

std::optional<double> Observation::realized(JobId j) const {
  if (status(j) != JobStatus::completed) return std::nullopt;
  return engine_->real_.p[static_cast<std::size_t>(j)];
}

MachineId Observation::queued_on(JobId j) const { return engine_->queued_on_.at(static_cast<std::size_t>(j)); }

std::span<const JobId> Observation::queue(MachineId i) const { return engine_->machine(i).waiting(); }

std::optional<RunningJob> Observation::running(MachineId i) const { return engine_->machine(i).running; }

bool Observation::available(MachineId i) const {
  const auto& ms = engine_->machine(i);
  return !ms.running && ms.empty();
}

std::vector<JobId> Observation::not_started() const {
  std::vector<JobId> out;
  for (std::size_t j = 0; j < engine_->n_; ++j)
    if (engine_->status_[j] == JobStatus::not_started) out.push_back(static_cast<JobId>(j));
  return out;
}

std::span<const JobId> Observation::completed() const { return engine_->completed_; }

// ---------------------------------------------------------------------------
// Engine

void Engine::install_initial_assignment() {
  auto queues = policy_.initial_assignment(inst_);
  if (queues.size() > machines_.size()) fault("initial assignment names more machines than exist");
  queues.resize(machines_.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < queues.size(); ++i) {
    for (JobId j : queues[i]) {
      if (j < 0 || static_cast<std::size_t>(j) >= n_) fault("initial assignment names unknown job");
      if (queued_on_[static_cast<std::size_t>(j)] != kUnassigned) fault("job assigned twice initially");
      queued_on_[static_cast<std::size_t>(j)] = static_cast<MachineId>(i);
      ++assigned;
    }
    machines_[i].queue = queues[i];
  }
  if (assigned != n_ && mode_.kind != AdaptivityClass::Kind::any)
    fault("restricted modes need every job in the initial assignment");
  trace_.initial_queues = std::move(queues);
}

void Engine::remove_from_queue(JobId j) {
  const MachineId from = queued_on_[static_cast<std::size_t>(j)];
  if (from == kUnassigned) return;
  auto& ms = machine(from);
  auto it = std::find(ms.queue.begin() + static_cast<std::ptrdiff_t>(ms.head), ms.queue.end(), j);
  ms.queue.erase(it);
  queued_on_[static_cast<std::size_t>(j)] = kUnassigned;
}

void Engine::apply(const PolicyAction& action) {
  if (action.empty()) return;
  switch (mode_.kind) {
    case AdaptivityClass::Kind::fixed:
      fault("reassignment requested in fixed mode");
    case AdaptivityClass::Kind::shift:
      if (!is_multiple_of(now_, mode_.parameter)) fault("reassignment off the shift grid");
      break;
    default:
      break;
  }
  std::vector<char> seen(n_, 0);
  for (const auto& r : action.reassignments) {
    if (r.job < 0 || static_cast<std::size_t>(r.job) >= n_) fault("unknown job in action");
    if (status_[static_cast<std::size_t>(r.job)] != JobStatus::not_started)
      fault("job " + std::to_string(r.job) + " already started");
    if (seen[static_cast<std::size_t>(r.job)]) fault("job listed twice in one action");
    seen[static_cast<std::size_t>(r.job)] = 1;
    if (r.target < 0 || static_cast<std::size_t>(r.target) >= machines_.size())
      fault("unknown target machine");
  }

  std::vector<MachineId> from(action.reassignments.size());
  for (std::size_t k = 0; k < action.reassignments.size(); ++k) {
    const JobId j = action.reassignments[k].job;
    from[k] = queued_on_[static_cast<std::size_t>(j)];
    remove_from_queue(j);
  }
  for (std::size_t k = 0; k < action.reassignments.size(); ++k) {
    const auto& r = action.reassignments[k];
    auto& ms = machine(r.target);
    const std::size_t waiting = ms.queue.size() - ms.head;
    const std::size_t pos = ms.head + std::min(r.position, waiting);
    ms.queue.insert(ms.queue.begin() + static_cast<std::ptrdiff_t>(pos), r.job);
    queued_on_[static_cast<std::size_t>(r.job)] = r.target;

    double stamp = std::max(now_, r.earliest_start.value_or(now_));
    if (mode_.kind == AdaptivityClass::Kind::delta) stamp = std::max(stamp, now_ + mode_.parameter);
    stamp_[static_cast<std::size_t>(r.job)] = stamp;

    trace_.reassignments.push_back({now_, r.job, from[k], r.target, stamp});
    dirty_.insert(r.target);
    if (from[k] != kUnassigned) dirty_.insert(from[k]);
  }
}

void Engine::finish(MachineId i) {
  auto& ms = machine(i);
  const JobId j = ms.running->job;
  trace_.placements[static_cast<std::size_t>(j)].completion = ms.running_end;
  status_[static_cast<std::size_t>(j)] = JobStatus::completed;
  completed_.push_back(j);
  ms.running.reset();
}

void Engine::process_machine(MachineId i) {
  auto& ms = machine(i);
  while (!ms.running) {
    if (!ms.empty()) {
      const JobId j = ms.queue[ms.head];
      const double stamp = stamp_[static_cast<std::size_t>(j)];
      if (stamp > now_) {
        events_.push({stamp, i, false});
        return;
      }
      ++ms.head;
      ++started_count_;
      queued_on_[static_cast<std::size_t>(j)] = kUnassigned;
      status_[static_cast<std::size_t>(j)] = JobStatus::running;
      const double p = real_.p[static_cast<std::size_t>(j)];
      trace_.placements[static_cast<std::size_t>(j)] = {i, now_, now_};
      ms.running = RunningJob{j, now_};
      ms.running_end = now_ + p;
      if (p == 0.0) {
        finish(i);
        continue;
      }
      events_.push({ms.running_end, i, true});
      return;
    }
    if (!policy_.wants_starved_callbacks() || started_count_ == n_) return;
    const auto action = policy_.on_machine_starved(Observation(*this), i);
    if (action.empty()) return;
    apply(action);
    if (ms.empty()) return;
  }
}

void Engine::dispatch() {
  while (!dirty_.empty()) {
    const MachineId i = *dirty_.begin();
    dirty_.erase(dirty_.begin());
    process_machine(i);
  }
}

ScheduleTrace Engine::run() {
  if (real_.p.size() != n_) throw std::invalid_argument("run_policy: realization length mismatch");
  install_initial_assignment();

  std::vector<double> decisions = policy_.decision_times(inst_);
  for (double t : decisions)
    if (!(t >= 0.0) || !std::isfinite(t)) fault("decision times must be finite and nonnegative");
  std::sort(decisions.begin(), decisions.end());
  decisions.erase(std::unique(decisions.begin(), decisions.end()), decisions.end());
  std::size_t next_decision = 0;

  for (MachineId i = 0; i < inst_.machines(); ++i) dirty_.insert(i);
  now_ = 0.0;
  for (;;) {
    if (next_decision < decisions.size() && decisions[next_decision] == now_) {
      trace_.decision_times.push_back(now_);
      apply(policy_.on_decision_point(Observation(*this)));
      ++next_decision;
    }
    dispatch();

    if (completed_.size() == n_) break;
    double next = std::numeric_limits<double>::infinity();
    if (!events_.empty()) next = events_.top().time;
    if (next_decision < decisions.size()) next = std::min(next, decisions[next_decision]);
    if (!std::isfinite(next)) fault(std::to_string(n_ - started_count_) + " jobs can never start");
    now_ = next;
    while (!events_.empty() && events_.top().time <= now_) {
      const Event ev = events_.top();
      events_.pop();
      if (ev.completion) finish(ev.machine);
      dirty_.insert(ev.machine);
    }
  }
  return std::move(trace_);
}

ScheduleTrace run_policy(const Instance& inst, const Realization& real, Policy& policy,
                         AdaptivityClass mode) {
  Engine engine(inst, real, policy, mode);
  return engine.run();
}

}  // namespace stosched::sim
