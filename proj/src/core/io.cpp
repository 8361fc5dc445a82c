#include "stosched/core/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace stosched {

Instance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("jobs"))
    throw std::invalid_argument("instance JSON needs fields \"m\" and \"jobs\"");
  if (!j.at("m").is_number_integer()) throw std::invalid_argument("instance \"m\" must be an integer");
  const int m = j.at("m").get<int>();
  std::vector<Dist> jobs;
  for (const auto& law : j.at("jobs")) {
    std::vector<Dist::Atom> atoms;
    for (const auto& atom : law) {
      if (!atom.is_array() || atom.size() != 2)
        throw std::invalid_argument("instance job atoms must be [value, prob] pairs");
      atoms.push_back({atom[0].get<double>(), atom[1].get<double>()});
    }
    jobs.emplace_back(std::move(atoms));
  }
  return Instance(m, std::move(jobs));
}

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json jobs = nlohmann::json::array();
  for (const auto& law : inst.job_laws()) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : law.atoms()) atoms.push_back({a.value, a.prob});
    jobs.push_back(std::move(atoms));
  }
  return {{"m", inst.machines()}, {"jobs", std::move(jobs)}};
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed instance file '" + path + "': " + e.what());
  }
  return instance_from_json(j);
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_trace_csv(std::ostream& os, const ScheduleTrace& trace) {
  os << "job,machine,start,completion\n";
  for (std::size_t j = 0; j < trace.placements.size(); ++j) {
    const auto& p = trace.placements[j];
    os << j << ',' << p.machine << ',' << format_double(p.start) << ','
       << format_double(p.completion) << '\n';
  }
}

}  // namespace stosched
