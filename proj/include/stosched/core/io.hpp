#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "stosched/core/instance.hpp"
#include "stosched/core/trace.hpp"

namespace stosched {

/// Instance file format: {"m": int, "jobs": [[[value, prob], ...], ...]}.
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);
Instance load_instance(const std::string& path);

/// Shortest decimal form that round-trips a double.
std::string format_double(double x);

/// CSV rows (job, machine, start, completion) with a header line.
void write_trace_csv(std::ostream& os, const ScheduleTrace& trace);

}  // namespace stosched
