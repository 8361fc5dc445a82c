#include "stosched/cli/config.hpp"

#include <charconv>
#include <fstream>

namespace stosched::cli {

namespace {

template <typename T>
T get(const nlohmann::json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError("config key '" + key + "' has the wrong type");
  }
}

}  // namespace

void apply_seed(Settings& s, const std::string& text) {
  if (text == "auto") {
    s.seed.reset();
    s.seed_auto = true;
    return;
  }
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw UsageError("seed must be an unsigned 64-bit integer or 'auto', got '" + text + "'");
  s.seed = value;
  s.seed_auto = false;
}

void apply_json(Settings& s, const nlohmann::json& config) {
  if (!config.is_object()) throw UsageError("config must be a JSON object");
  for (const auto& [key, v] : config.items()) {
    if (key == "experiment" || key == "suite" || key == "kind") {
      s.name = get<std::string>(v, key);
    } else if (key == "instance") {
      if (v.is_string()) {
        s.instance_path = v.get<std::string>();
        s.instance_inline.reset();
      } else if (v.is_object()) {
        s.instance_inline = v;
        s.instance_path.reset();
      } else {
        throw UsageError("config key 'instance' must be a path or an object");
      }
    } else if (key == "N") {
      s.N = get<std::int64_t>(v, key);
    } else if (key == "m") {
      s.m = get<std::int64_t>(v, key);
    } else if (key == "policy") {
      s.policy = get<std::string>(v, key);
    } else if (key == "mode") {
      s.mode = get<std::string>(v, key);
    } else if (key == "delta") {
      s.delta = get<double>(v, key);
    } else if (key == "alpha") {
      s.alpha = get<double>(v, key);
    } else if (key == "tau") {
      s.tau = get<double>(v, key);
    } else if (key == "kappa") {
      s.kappa = get<double>(v, key);
    } else if (key == "trials") {
      s.trials = get<std::int64_t>(v, key);
    } else if (key == "seed") {
      if (v.is_string()) {
        apply_seed(s, v.get<std::string>());
      } else if (v.is_number_unsigned()) {
        s.seed = v.get<std::uint64_t>();
        s.seed_auto = false;
      } else {
        throw UsageError("config key 'seed' must be a nonnegative integer or \"auto\"");
      }
    } else if (key == "out") {
      s.out = get<std::string>(v, key);
    } else if (key == "threads") {
      s.threads = get<unsigned>(v, key);
    } else if (key == "r_max") {
      s.r_max = get<std::int64_t>(v, key);
    } else if (key == "t_max") {
      s.t_max = get<int>(v, key);
    } else if (key == "format") {
      s.format = get<std::string>(v, key);
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
}

void apply_config_file(Settings& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  nlohmann::json config;
  try {
    in >> config;
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  apply_json(s, config);
}

std::uint64_t require_seed(const Settings& s) {
  if (!s.seed) throw UsageError("this command is randomized: pass --seed <u64> or --seed auto");
  return *s.seed;
}

}  // namespace stosched::cli
