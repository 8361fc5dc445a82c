#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stosched/core/instance.hpp"

namespace stosched {

inline constexpr MachineId kUnassigned = -1;

struct Placement {
  MachineId machine = kUnassigned;
  double start = 0.0;
  double completion = 0.0;
};

/// A not-started job moved to (or within) a machine queue at `time`.
/// `from_machine` is kUnassigned when the job came from the unassigned pool.
struct ReassignmentEvent {
  double time = 0.0;
  JobId job = 0;
  MachineId from_machine = kUnassigned;
  MachineId to_machine = kUnassigned;
  double earliest_start = 0.0;
};

/// Everything the engine did on one realization.
struct ScheduleTrace {
  int machines = 0;
  std::vector<Placement> placements;              // indexed by job
  std::vector<std::vector<JobId>> initial_queues; // indexed by machine
  std::vector<ReassignmentEvent> reassignments;   // in order of occurrence
  std::vector<double> decision_times;             // scheduled decision points visited
};

/// Max completion time; 0 for an empty job set.
double makespan(const ScheduleTrace& trace);

/// Restriction a trace is checked against (also the engine's run mode).
struct AdaptivityClass {
  enum class Kind { any, fixed, delta, shift };
  Kind kind = Kind::any;
  double parameter = 0.0;  // delta or tau

  static AdaptivityClass any() { return {Kind::any, 0.0}; }
  static AdaptivityClass fixed() { return {Kind::fixed, 0.0}; }
  static AdaptivityClass delta(double d);
  static AdaptivityClass shift(double tau);

  std::string to_string() const;
};

/// Parses "any" / "adaptive", "fixed", "delta", "shift"; delta and shift need
/// a positive parameter. Throws std::invalid_argument otherwise.
AdaptivityClass parse_adaptivity(std::string_view name, std::optional<double> parameter);

/// True when t is an integer multiple of tau up to kTimeTolerance (relative to
/// the multiple's size).
bool is_multiple_of(double t, double tau);

enum class ViolationKind {
  bad_machine,
  duration_mismatch,
  negative_start,
  overlap,
  machine_mismatch,
  reassigned_after_start,
  delay,
  shift_grid,
  fixed_reassignment,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  JobId job = -1;
  MachineId machine = kUnassigned;
  std::string detail;
};

/// Raised when a trace cannot even be checked (mismatched lengths or ids).
class TraceStructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks machine disjointness, realized durations and the reassignment rules
/// of `cls`. Returns an empty list iff the trace is valid.
std::vector<Violation> validate_trace(const Instance& inst, const Realization& real,
                                      const ScheduleTrace& trace, AdaptivityClass cls);

}  // namespace stosched
