#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stosched/core/instance.hpp"
#include "stosched/core/trace.hpp"

namespace stosched::sim {

class Engine;

enum class JobStatus { not_started, running, completed };

struct RunningJob {
  JobId job;
  double start;
};

/// What a policy may see at a decision point. Realized durations are exposed
/// for completed jobs only; running jobs show their start time, not-started
/// jobs their expected duration and current queue.
class Observation {
 public:
  double now() const;
  int machines() const;
  int jobs() const;

  JobStatus status(JobId j) const;
  double expected(JobId j) const;
  /// Realized duration of a completed job; nullopt otherwise.
  std::optional<double> realized(JobId j) const;
  /// Machine whose queue currently holds a not-started job (kUnassigned if pooled).
  MachineId queued_on(JobId j) const;

  std::span<const JobId> queue(MachineId i) const;
  std::optional<RunningJob> running(MachineId i) const;
  /// Not running and nothing queued.
  bool available(MachineId i) const;

  std::vector<JobId> not_started() const;
  std::span<const JobId> completed() const;

 private:
  friend class Engine;
  explicit Observation(const Engine& e) : engine_(&e) {}
  const Engine* engine_;
};

/// One move of a not-started job. `position` indexes the target queue after
/// all moved jobs have been removed from their old queues; positions past the
/// end append. `earliest_start` requests a start no earlier than that time.
struct Reassignment {
  JobId job;
  MachineId target;
  std::size_t position = static_cast<std::size_t>(-1);
  std::optional<double> earliest_start;
};

struct PolicyAction {
  std::vector<Reassignment> reassignments;
  bool empty() const { return reassignments.empty(); }
};

/// Non-anticipatory policy. The engine calls initial_assignment once, then
/// on_decision_point at each of decision_times(), and on_machine_starved
/// whenever a machine is idle with an empty queue (if requested).
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::string name() const = 0;
  /// Per-machine ordered queues. Jobs left out stay in an unassigned pool,
  /// which is only legal in mode any.
  virtual std::vector<std::vector<JobId>> initial_assignment(const Instance& inst) = 0;
  virtual std::vector<double> decision_times(const Instance&) const { return {}; }
  virtual PolicyAction on_decision_point(const Observation&) { return {}; }
  virtual bool wants_starved_callbacks() const { return false; }
  virtual PolicyAction on_machine_starved(const Observation&, MachineId) { return {}; }
};

/// Raised when a policy asks for something the engine or the mode forbids.
class PolicyFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs `policy` on one realization. Machines start queue heads greedily
/// (subject to earliest-start stamps); the mode restricts reassignments:
/// fixed forbids them, delta(d) stamps moved jobs with now + d, shift(tau)
/// only allows them at multiples of tau. Throws PolicyFault on bad actions.
ScheduleTrace run_policy(const Instance& inst, const Realization& real, Policy& policy,
                         AdaptivityClass mode);

}  // namespace stosched::sim
