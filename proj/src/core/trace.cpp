#include "stosched/core/trace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace stosched {

double makespan(const ScheduleTrace& trace) {
  double best = 0.0;
  for (const auto& p : trace.placements) best = std::max(best, p.completion);
  return best;
}

AdaptivityClass AdaptivityClass::delta(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw std::invalid_argument("delta must be positive");
  return {Kind::delta, d};
}

AdaptivityClass AdaptivityClass::shift(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("tau must be positive");
  return {Kind::shift, tau};
}

std::string AdaptivityClass::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::any: return "any";
    case Kind::fixed: return "fixed";
    case Kind::delta: os << "delta(" << parameter << ")"; break;
    case Kind::shift: os << "shift(" << parameter << ")"; break;
  }
  return os.str();
}

AdaptivityClass parse_adaptivity(std::string_view name, std::optional<double> parameter) {
  if (name == "any" || name == "adaptive") return AdaptivityClass::any();
  if (name == "fixed") return AdaptivityClass::fixed();
  if (name == "delta" || name == "shift") {
    if (!parameter) throw std::invalid_argument("mode '" + std::string(name) + "' needs a parameter");
    return name == "delta" ? AdaptivityClass::delta(*parameter) : AdaptivityClass::shift(*parameter);
  }
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

bool is_multiple_of(double t, double tau) {
  const double ratio = t / tau;
  const double nearest = std::round(ratio);
  return std::abs(ratio - nearest) <= kTimeTolerance * std::max(1.0, std::abs(nearest));
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::bad_machine: return "bad_machine";
    case ViolationKind::duration_mismatch: return "duration_mismatch";
    case ViolationKind::negative_start: return "negative_start";
    case ViolationKind::overlap: return "overlap";
    case ViolationKind::machine_mismatch: return "machine_mismatch";
    case ViolationKind::reassigned_after_start: return "reassigned_after_start";
    case ViolationKind::delay: return "delay";
    case ViolationKind::shift_grid: return "shift_grid";
    case ViolationKind::fixed_reassignment: return "fixed_reassignment";
  }
  return "unknown";
}

namespace {

std::string describe(double a, double b) {
  std::ostringstream os;
  os.precision(17);
  os << a << " vs " << b;
  return os.str();
}

}  // namespace

std::vector<Violation> validate_trace(const Instance& inst, const Realization& real,
                                      const ScheduleTrace& trace, AdaptivityClass cls) {
  const auto n = static_cast<std::size_t>(inst.jobs());
  if (real.p.size() != n)
    throw TraceStructureError("realization length does not match instance");
  if (trace.placements.size() != n)
    throw TraceStructureError("trace placements do not match instance");
  if (trace.machines != inst.machines())
    throw TraceStructureError("trace machine count does not match instance");
  for (const auto& ev : trace.reassignments)
    if (ev.job < 0 || static_cast<std::size_t>(ev.job) >= n)
      throw TraceStructureError("reassignment event names an unknown job");
  if (trace.initial_queues.size() > static_cast<std::size_t>(inst.machines()))
    throw TraceStructureError("trace has more queues than machines");
  for (const auto& q : trace.initial_queues)
    for (JobId j : q)
      if (j < 0 || static_cast<std::size_t>(j) >= n)
        throw TraceStructureError("initial queue names an unknown job");

  std::vector<Violation> out;
  const int m = inst.machines();
  std::vector<std::vector<JobId>> per_machine(static_cast<std::size_t>(m));

  for (std::size_t j = 0; j < n; ++j) {
    const auto& pl = trace.placements[j];
    const JobId job = static_cast<JobId>(j);
    if (pl.machine < 0 || pl.machine >= m) {
      out.push_back({ViolationKind::bad_machine, job, pl.machine, "job not placed on a machine"});
      continue;
    }
    if (pl.start < -kTimeTolerance)
      out.push_back({ViolationKind::negative_start, job, pl.machine, describe(pl.start, 0.0)});
    if (std::abs((pl.completion - pl.start) - real.p[j]) >
        kTimeTolerance * std::max(1.0, std::abs(pl.completion)))
      out.push_back({ViolationKind::duration_mismatch, job, pl.machine,
                     describe(pl.completion - pl.start, real.p[j])});
    per_machine[static_cast<std::size_t>(pl.machine)].push_back(job);
  }

  for (MachineId i = 0; i < m; ++i) {
    auto& jobs = per_machine[static_cast<std::size_t>(i)];
    std::sort(jobs.begin(), jobs.end(), [&](JobId a, JobId b) {
      const auto& pa = trace.placements[static_cast<std::size_t>(a)];
      const auto& pb = trace.placements[static_cast<std::size_t>(b)];
      return std::tie(pa.start, pa.completion, a) < std::tie(pb.start, pb.completion, b);
    });
    for (std::size_t k = 1; k < jobs.size(); ++k) {
      const auto& prev = trace.placements[static_cast<std::size_t>(jobs[k - 1])];
      const auto& cur = trace.placements[static_cast<std::size_t>(jobs[k])];
      if (prev.completion > cur.start + kTimeTolerance)
        out.push_back({ViolationKind::overlap, jobs[k], i, describe(prev.completion, cur.start)});
    }
  }

  // Last recorded target per job must be where it ran; no move after start.
  std::vector<MachineId> last_target(n, kUnassigned);
  for (std::size_t i = 0; i < trace.initial_queues.size(); ++i)
    for (JobId j : trace.initial_queues[i]) last_target[static_cast<std::size_t>(j)] = static_cast<MachineId>(i);
  for (const auto& ev : trace.reassignments) {
    const auto& pl = trace.placements[static_cast<std::size_t>(ev.job)];
    last_target[static_cast<std::size_t>(ev.job)] = ev.to_machine;
    if (ev.time > pl.start + kTimeTolerance)
      out.push_back({ViolationKind::reassigned_after_start, ev.job, ev.to_machine,
                     describe(ev.time, pl.start)});
    switch (cls.kind) {
      case AdaptivityClass::Kind::any:
        break;
      case AdaptivityClass::Kind::fixed:
        out.push_back({ViolationKind::fixed_reassignment, ev.job, ev.to_machine,
                       "reassignment in a fixed assignment trace"});
        break;
      case AdaptivityClass::Kind::delta:
        if (pl.start < ev.time + cls.parameter - kTimeTolerance)
          out.push_back({ViolationKind::delay, ev.job, ev.to_machine,
                         describe(pl.start, ev.time + cls.parameter)});
        break;
      case AdaptivityClass::Kind::shift:
        if (!is_multiple_of(ev.time, cls.parameter))
          out.push_back({ViolationKind::shift_grid, ev.job, ev.to_machine,
                         describe(ev.time, cls.parameter)});
        break;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const MachineId target = last_target[j];
    const auto& pl = trace.placements[j];
    if (target != kUnassigned && pl.machine >= 0 && target != pl.machine)
      out.push_back({ViolationKind::machine_mismatch, static_cast<JobId>(j), pl.machine,
                     "ran on a machine other than its last assignment"});
  }
  return out;
}

}  // namespace stosched
