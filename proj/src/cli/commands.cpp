#include "stosched/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "stosched/core/io.hpp"
#include "stosched/core/parallel.hpp"
#include "stosched/core/stats.hpp"
#include "stosched/lowerbound/lowerbound.hpp"
#include "stosched/prob/bounds.hpp"
#include "stosched/simulate/estimate.hpp"
#include "stosched/simulate/metrics.hpp"
#include "stosched/simulate/policies.hpp"

namespace stosched::cli {

namespace {

using nlohmann::json;

std::string num(double x) { return std::isnan(x) ? std::string() : format_double(x); }

std::string header(const Settings& s, const std::string& extra) {
  std::ostringstream os;
  os << "# stosched " << s.command;
  if (!s.name.empty()) os << ' ' << s.name;
  os << " schema=" << kSchemaVersion;
  if (s.seed) os << " seed=" << *s.seed << (s.seed_auto ? " seed_source=auto" : "");
  if (!extra.empty()) os << ' ' << extra;
  os << '\n';
  return os.str();
}

std::int64_t positive(std::optional<std::int64_t> v, std::int64_t fallback, const char* what) {
  const std::int64_t x = v.value_or(fallback);
  if (x < 1) throw UsageError(std::string(what) + " must be at least 1");
  return x;
}

Instance resolve_instance(const Settings& s, std::string& description) {
  try {
    if (s.instance_path) {
      description = "instance=" + *s.instance_path;
      return load_instance(*s.instance_path);
    }
    if (s.instance_inline) {
      description = "instance=inline";
      return instance_from_json(*s.instance_inline);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const json::exception& e) {
    throw UsageError(std::string("instance: ") + e.what());
  }
  const auto N = positive(s.N, 10, "N");
  const auto m = positive(s.m, 8, "m");
  description = "instance=bernoulli N=" + std::to_string(N) + " m=" + std::to_string(m);
  return bernoulli_instance(N, m);
}

struct PolicyChoice {
  sim::PolicyFactory factory;
  AdaptivityClass mode;
  bool checkpoint = false;
  double delta = 0.0;
  std::string description;
};

PolicyChoice choose_policy(const Settings& s, const std::string& name, const Instance& inst) {
  PolicyChoice c;
  const double T = sim::compute_T(inst);
  c.delta = s.delta.value_or(s.kappa * T / 2.0);
  if (name == "list") {
    c.factory = [] { return sim::list_scheduling_policy(); };
    c.mode = AdaptivityClass::any();
  } else if (name == "lept-fix") {
    c.factory = [] { return sim::lept_fix_policy(); };
    c.mode = AdaptivityClass::fixed();
  } else if (name == "single") {
    c.factory = [] { return sim::single_machine_policy(); };
    c.mode = AdaptivityClass::fixed();
  } else if (name == "lept-delta-alpha" || name == "lept-delta-alpha-practical") {
    if (!(c.delta > 0.0)) throw UsageError("delta must be positive");
    if (!(s.alpha > 0.0)) throw UsageError("alpha must be positive");
    const bool practical = name == "lept-delta-alpha-practical";
    const double delta = c.delta, alpha = s.alpha;
    c.factory = [=] { return sim::lept_delta_alpha_policy(delta, alpha, practical); };
    c.mode = AdaptivityClass::delta(delta);
    c.checkpoint = true;
  } else {
    throw UsageError("unknown policy '" + name +
                     "' (list, lept-fix, single, lept-delta-alpha, lept-delta-alpha-practical)");
  }
  if (s.mode) {
    std::optional<double> parameter;
    if (*s.mode == "delta") parameter = c.delta;
    if (*s.mode == "shift") parameter = s.tau.value_or(c.delta + s.alpha * T);
    try {
      c.mode = parse_adaptivity(*s.mode, parameter);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  c.description = "policy=" + name + " mode=" + c.mode.to_string();
  if (c.checkpoint) c.description += " delta=" + format_double(c.delta) + " alpha=" + format_double(s.alpha);
  return c;
}

// ---------------------------------------------------------------------------
// verify helpers

struct Report {
  std::string suite;
  std::int64_t checks = 0;
  std::int64_t failed = 0;
  json failures = json::array();

  void check(bool ok, const std::function<json()>& describe) {
    ++checks;
    if (ok) return;
    ++failed;
    if (failures.size() < 50) failures.push_back(describe());
  }

  CommandOutput finish(const Settings& s) const {
    json out;
    out["schema"] = kSchemaVersion;
    out["suite"] = suite;
    if (s.seed) out["seed"] = *s.seed;
    out["checks"] = checks;
    out["failed"] = failed;
    out["passed"] = failed == 0;
    out["failures"] = failures;
    return {failed == 0 ? 0 : 1, out.dump(2) + "\n", {}};
  }
};

constexpr double kExactTolerance = 1e-12;

void verify_dominance(Report& rep) {
  for (double q : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (lb::Count k2 = 1; k2 <= 12; ++k2) {
      for (lb::Count k1 = 0; k1 < k2; ++k1) {
        rep.check(lb::dominance_clip_lemma_check(q, k1, k2),
                  [&] { return json{{"check", "lemma"}, {"q", q}, {"k1", k1}, {"k2", k2}}; });
        rep.check(lb::dominance_clip_corollary_check(q, k1, k2),
                  [&] { return json{{"check", "corollary"}, {"q", q}, {"k1", k1}, {"k2", k2}}; });
        if (k2 < k1 + 2) continue;
        for (const auto& t : lb::clip_lemma_terms(q, k1, k2)) {
          for (int i = 0; i < 4; ++i) {
            const double e = t.enumerated[i];
            const double iv = t.interval[i];
            const double cf = t.closed[i];
            const bool ok = std::abs(e - iv) <= kExactTolerance &&
                            (std::isnan(cf) || std::abs(e - cf) <= kExactTolerance);
            rep.check(ok, [&] {
              return json{{"check", "closed form"}, {"q", q}, {"k1", k1}, {"k2", k2}, {"alpha", t.alpha},
                          {"term", "p" + std::to_string(i + 1)}, {"enumerated", e}, {"interval", iv},
                          {"closed", std::isnan(cf) ? json(nullptr) : json(cf)}};
            });
          }
          const double lhs = t.enumerated[0] + t.enumerated[2];
          const double rhs = t.enumerated[1] + t.enumerated[3];
          rep.check(lhs >= rhs - kExactTolerance, [&] {
            return json{{"check", "p1+p3>=p2+p4"}, {"q", q}, {"k1", k1}, {"k2", k2}, {"alpha", t.alpha},
                        {"lhs", lhs}, {"rhs", rhs}};
          });
        }
      }
    }
  }
}

void verify_balancing(Report& rep) {
  for (lb::Count N = 1; N <= 6; ++N) {
    for (lb::Count m = 1; m <= 3; ++m) {
      const auto table = lb::bellman_opt1(N, m, 9);
      for (lb::Count r = 0; r <= 9; ++r) {
        const double dp = table.values[static_cast<std::size_t>(r)];
        const double bf = lb::brute_force_opt1(N, m, r);
        rep.check(std::abs(dp - bf) <= kExactTolerance, [&] {
          return json{{"N", N}, {"m", m}, {"r", r}, {"bellman", dp}, {"brute_force", bf}};
        });
      }
    }
  }
}

void verify_load_lemma(Report& rep, std::uint64_t seed, std::int64_t trials) {
  for (std::int64_t i = 0; i < trials; ++i) {
    auto stream = RngStream::derive(seed, static_cast<std::uint64_t>(i));
    const auto inst = random_instance(stream, 200, 20);
    const auto expected = inst.expectations();
    const auto queues = sim::lept_fix_assignment(inst);
    const auto res = sim::check_load_lemma(expected, queues, 1e-9);
    rep.check(res.holds, [&] {
      return json{{"instance", i}, {"ell", res.ell}, {"machine", res.machine}, {"load", res.load},
                  {"jobs_on_machine", res.count}};
    });
    const double T = sim::compute_T(inst);
    rep.check(2.0 * res.ell <= T + 1e-9, [&] { return json{{"instance", i}, {"two_ell", 2.0 * res.ell}, {"T", T}}; });
  }
}

void verify_scaling(Report& rep, std::uint64_t seed, std::int64_t trials, unsigned threads) {
  for (lb::Count D : {1, 2, 4}) {
    const auto report = lb::delta_scaling_check(4, 2, D, trials, seed, threads);
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
      const auto& t = report.trials[i];
      rep.check(t.identity_holds && t.bound_holds && t.replay_valid, [&] {
        return json{{"N", 4}, {"m", 2}, {"delta", 1.0 / static_cast<double>(D)}, {"trial", i},
                    {"makespan_delta", t.makespan_delta}, {"makespan_one", t.makespan_one},
                    {"makespan_delta_all", t.makespan_delta_all}, {"makespan_one_all", t.makespan_one_all}};
      });
    }
  }
}

void verify_lambda(Report& rep, const Settings& s, std::uint64_t seed, unsigned threads) {
  const auto N = positive(s.N, 100, "N");
  const auto m = positive(s.m, 10000, "m");
  const auto trials = positive(s.trials, 2000, "trials");
  const auto samples = lb::simulate_lambda(N, m, 2, trials, seed, threads);
  const bool start_ok = std::all_of(samples.lambda[0].begin(), samples.lambda[0].end(),
                                    [](double x) { return x == 1.0; });
  rep.check(start_ok, [] { return json{{"check", "lambda_0 == 1"}}; });
  for (int t = 1; t <= 2; ++t) {
    const double thr = lb::lambda_threshold(t);
    const auto& row = samples.lambda[static_cast<std::size_t>(t)];
    const double freq =
        static_cast<double>(std::count_if(row.begin(), row.end(), [&](double x) { return x >= thr; })) /
        static_cast<double>(row.size());
    const double bound = lb::lambda_tail_bound(static_cast<double>(m), t);
    const double se = std::sqrt(std::max(bound * (1.0 - bound), 0.0) / static_cast<double>(row.size()));
    rep.check(freq >= bound - 3.0 * se, [&] {
      return json{{"check", "tail bound"}, {"t", t}, {"N", N}, {"m", m}, {"frequency", freq}, {"bound", bound}};
    });
  }
  // One simulated round against the exact remaining-count law.
  std::uint64_t sub = 0;
  for (lb::Count n = 2; n <= 4; ++n) {
    for (lb::Count mm = 1; mm <= 3; ++mm) {
      const auto exact = lb::remaining_after_round(lb::balanced_assignment(n * mm, mm), n);
      const auto draws = lb::simulate_one_round(n * mm, mm, n, 100000, seed ^ (0x9e37u + sub++), threads);
      std::vector<long> counts(exact.pmf.size(), 0);
      bool in_support = true;
      for (auto r : draws) {
        if (r < 0 || static_cast<std::size_t>(r) >= counts.size()) in_support = false;
        else ++counts[static_cast<std::size_t>(r)];
      }
      const auto chi = chi_square(counts, exact.pmf);
      const double crit = chi_square_critical(chi.dof, 3.29);
      rep.check(in_support && chi.statistic <= crit, [&] {
        return json{{"check", "one-round chi-square"}, {"N", n}, {"m", mm}, {"statistic", chi.statistic},
                    {"dof", chi.dof}, {"critical", crit}};
      });
    }
  }
}

// ---------------------------------------------------------------------------
// experiments

std::string experiment_growth(const Settings& s) {
  const auto seed = require_seed(s);
  const auto N = positive(s.N, 32, "N");
  const auto trials = positive(s.trials, 2000, "trials");
  std::ostringstream os;
  os << header(s, "N=" + std::to_string(N) + " trials=" + std::to_string(trials));
  os << "m,N,opt1_mean,ci95_half_width,loglog_m,opt1_exact\n";
  for (lb::Count m : {4, 16, 64, 256, 1024}) {
    const auto values = lb::simulate_opt1_makespans(N, m, trials, seed, s.threads);
    const auto sum = summarize(values);
    std::string exact;
    if (N * m <= 512) exact = num(lb::bellman_opt1(N, m, N * m).values.back());
    os << m << ',' << N << ',' << num(sum.mean) << ',' << num(sum.half_width_95) << ','
       << num(std::log2(std::log2(static_cast<double>(m)))) << ',' << exact << '\n';
  }
  return os.str();
}

std::string experiment_squaring(const Settings& s) {
  const auto seed = require_seed(s);
  const auto N = positive(s.N, 10000, "N");
  const auto m = positive(s.m, 1000, "m");
  const auto trials = positive(s.trials, 10000, "trials");
  const double total = static_cast<double>(N * m);
  std::ostringstream os;
  os << header(s, "N=" + std::to_string(N) + " m=" + std::to_string(m) + " trials=" + std::to_string(trials));
  os << "lambda,empirical_next,std_error,limit,lower,upper\n";
  std::uint64_t sub = 0;
  for (double lambda : {1.0, 0.75, 0.5, 0.25, 0.125}) {
    const auto r0 = static_cast<lb::Count>(std::llround(lambda * total));
    const auto next = lb::simulate_one_round(r0, m, N, trials, seed + sub++, s.threads);
    std::vector<double> frac(next.size());
    std::transform(next.begin(), next.end(), frac.begin(),
                   [&](lb::Count r) { return static_cast<double>(r) / total; });
    const auto sum = summarize(frac);
    os << num(lambda) << ',' << num(sum.mean) << ',' << num(sum.stddev / std::sqrt(static_cast<double>(trials)))
       << ',' << num(prob::squaring_limit(lambda)) << ',' << num(lambda * lambda / std::exp(1.0)) << ','
       << num(lambda * lambda / 2.0) << '\n';
  }
  return os.str();
}

std::string experiment_policy_compare(const Settings& s) {
  const auto seed = require_seed(s);
  const auto N = positive(s.N, 10, "N");
  const auto trials = positive(s.trials, 500, "trials");
  std::ostringstream os;
  os << header(s, "N=" + std::to_string(N) + " trials=" + std::to_string(trials) + " alpha=" + num(s.alpha) +
                      " kappa=" + num(s.kappa));
  os << "m,list_mean,list_ci95,lept_fix_mean,lept_fix_ci95,lept_delta_alpha_mean,lept_delta_alpha_ci95,"
        "lept_delta_alpha_over_list\n";
  for (lb::Count m : {4, 16, 64, 256}) {
    const auto inst = bernoulli_instance(N, m);
    os << m;
    double list_mean = 0.0, da_mean = 0.0;
    for (const char* name : {"list", "lept-fix", "lept-delta-alpha"}) {
      Settings local = s;
      local.mode.reset();
      const auto choice = choose_policy(local, name, inst);
      const auto sum = sim::estimate_expected_makespan(inst, choice.factory, choice.mode, trials, seed, s.threads);
      if (std::string(name) == "list") list_mean = sum.mean;
      if (std::string(name) == "lept-delta-alpha") da_mean = sum.mean;
      os << ',' << num(sum.mean) << ',' << num(sum.half_width_95);
    }
    os << ',' << num(da_mean / list_mean) << '\n';
  }
  return os.str();
}

std::string experiment_xi(const Settings& s) {
  const auto seed = require_seed(s);
  const auto N = positive(s.N, 10, "N");
  const auto m = positive(s.m, 256, "m");
  const auto trials = positive(s.trials, 1000, "trials");
  const auto inst = bernoulli_instance(N, m);
  const double T = sim::compute_T(inst);
  const double delta = s.delta.value_or(s.kappa * T / 2.0);
  if (!(delta > 0.0)) throw UsageError("delta must be positive");
  const double alpha = s.alpha;
  const auto taus = sim::checkpoint_times(inst, delta, alpha);
  const std::size_t K = taus.size() + 1;

  std::vector<std::vector<double>> xi(static_cast<std::size_t>(trials)), a(static_cast<std::size_t>(trials));
  parallel_for(trials, s.threads, [&](std::int64_t t) {
    auto stream = RngStream::derive(seed, static_cast<std::uint64_t>(t));
    const auto real = sample_realization(inst, stream);
    auto policy = sim::lept_delta_alpha_policy(delta, alpha);
    const auto trace = sim::run_policy(inst, real, *policy, AdaptivityClass::delta(delta));
    const auto met = sim::checkpoint_metrics(trace, inst, delta, alpha);
    xi[static_cast<std::size_t>(t)] = met.xi;
    a[static_cast<std::size_t>(t)] = met.a;
  });

  std::optional<prob::AnalysisConstants> consts;
  if (alpha > 32.0 && m >= 2) consts = prob::analysis_constants(alpha, static_cast<double>(m));

  std::ostringstream os;
  os << header(s, "N=" + std::to_string(N) + " m=" + std::to_string(m) + " trials=" + std::to_string(trials) +
                      " delta=" + num(delta) + " alpha=" + num(alpha) + " T=" + num(T));
  os << "k,tau,mean_xi,mean_a,gamma_k,beta_k\n";
  for (std::size_t k = 0; k < K; ++k) {
    double sx = 0.0, sa = 0.0;
    for (std::size_t t = 0; t < xi.size(); ++t) {
      sx += xi[t][k];
      sa += a[t][k];
    }
    const double g = consts && k < consts->gamma.size() ? consts->gamma[k] : std::nan("");
    const double b = consts && k < consts->beta.size() ? consts->beta[k] : std::nan("");
    os << k << ',' << num(k == 0 ? 0.0 : taus[k - 1]) << ',' << num(sx / static_cast<double>(trials)) << ','
       << num(sa / static_cast<double>(trials)) << ',' << num(g) << ',' << num(b) << '\n';
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------

CommandOutput cmd_simulate(const Settings& s) {
  const auto seed = require_seed(s);
  const auto trials = positive(s.trials, 1000, "trials");
  std::string inst_desc;
  const auto inst = resolve_instance(s, inst_desc);
  const auto choice = choose_policy(s, s.policy, inst);
  const auto values = sim::simulate_makespans(inst, choice.factory, choice.mode, trials, seed, s.threads);
  const auto sum = summarize(values);

  CommandOutput out;
  std::ostringstream os;
  os << header(s, choice.description + ' ' + inst_desc + " trials=" + std::to_string(trials));
  os << "trial,makespan\n";
  for (std::size_t t = 0; t < values.size(); ++t) os << t << ',' << num(values[t]) << '\n';
  os << "mean," << num(sum.mean) << '\n';
  os << "ci95_half_width," << num(sum.half_width_95) << '\n';
  os << "min," << num(sum.min) << '\n';
  os << "max," << num(sum.max) << '\n';
  out.text = os.str();

  if (s.trace_out || s.metrics_out) {
    auto stream = RngStream::derive(seed, 0);
    const auto real = sample_realization(inst, stream);
    auto policy = choice.factory();
    const auto trace = sim::run_policy(inst, real, *policy, choice.mode);
    if (s.trace_out) {
      std::ostringstream ts;
      ts << header(s, choice.description + " trial=0");
      write_trace_csv(ts, trace);
      out.files.emplace_back(*s.trace_out, ts.str());
    }
    if (s.metrics_out) {
      if (!choice.checkpoint) throw UsageError("--metrics-out needs a lept-delta-alpha policy");
      const auto met = sim::checkpoint_metrics(trace, inst, choice.delta, s.alpha);
      std::ostringstream ms;
      ms << header(s, choice.description + " trial=0");
      ms << "k,tau,xi,a\n";
      for (std::size_t k = 0; k < met.xi.size(); ++k)
        ms << k << ',' << num(met.times[k]) << ',' << num(met.xi[k]) << ',' << num(met.a[k]) << '\n';
      out.files.emplace_back(*s.metrics_out, ms.str());
    }
  }
  return out;
}

CommandOutput cmd_dp(const Settings& s) {
  if (!s.N || !s.m) throw UsageError("dp needs --N and --m");
  const auto N = positive(s.N, 1, "N");
  const auto m = positive(s.m, 1, "m");
  const auto r_max = s.r_max.value_or(N * m);
  if (r_max < 0) throw UsageError("r_max must be nonnegative");
  if (r_max > 2048) throw UsageError("r_max above 2048 is too large for the exact table");
  const auto table = lb::bellman_opt1(N, m, r_max);
  CommandOutput out;
  if (s.format == "json") {
    json j{{"schema", kSchemaVersion}, {"N", N}, {"m", m}, {"values", table.values}};
    out.text = j.dump(2) + "\n";
  } else if (s.format == "csv") {
    std::ostringstream os;
    os << header(s, "N=" + std::to_string(N) + " m=" + std::to_string(m));
    os << "r,J\n";
    for (std::size_t r = 0; r < table.values.size(); ++r) os << r << ',' << num(table.values[r]) << '\n';
    out.text = os.str();
  } else {
    throw UsageError("format must be csv or json");
  }
  return out;
}

CommandOutput cmd_verify(const Settings& s) {
  Report rep;
  rep.suite = s.name;
  if (s.name == "dominance") {
    verify_dominance(rep);
  } else if (s.name == "balancing") {
    verify_balancing(rep);
  } else if (s.name == "load-lemma") {
    verify_load_lemma(rep, require_seed(s), positive(s.trials, 1000, "trials"));
  } else if (s.name == "scaling") {
    verify_scaling(rep, require_seed(s), positive(s.trials, 1000, "trials"), s.threads);
  } else if (s.name == "lambda") {
    verify_lambda(rep, s, require_seed(s), s.threads);
  } else {
    throw UsageError("unknown verify suite '" + s.name + "' (dominance, balancing, load-lemma, scaling, lambda)");
  }
  return rep.finish(s);
}

CommandOutput cmd_experiment(const Settings& s) {
  CommandOutput out;
  if (s.name == "growth") out.text = experiment_growth(s);
  else if (s.name == "squaring") out.text = experiment_squaring(s);
  else if (s.name == "policy-compare") out.text = experiment_policy_compare(s);
  else if (s.name == "xi-trajectory") out.text = experiment_xi(s);
  else throw UsageError("unknown preset '" + s.name + "' (growth, squaring, policy-compare, xi-trajectory)");
  return out;
}

CommandOutput cmd_lambda(const Settings& s) {
  const auto seed = require_seed(s);
  const auto N = positive(s.N, 100, "N");
  const auto m = positive(s.m, 100, "m");
  const auto trials = positive(s.trials, 1000, "trials");
  const int t_max = s.t_max.value_or(4);
  if (t_max < 0) throw UsageError("t_max must be nonnegative");
  const auto samples = lb::simulate_lambda(N, m, t_max, trials, seed, s.threads);
  std::ostringstream os;
  os << header(s, "N=" + std::to_string(N) + " m=" + std::to_string(m) + " trials=" + std::to_string(trials));
  os << "t,mean,min,q10,q25,median,q75,q90,max,threshold,tail_frequency,bound\n";
  for (int t = 0; t <= t_max; ++t) {
    const auto& row = samples.lambda[static_cast<std::size_t>(t)];
    const auto sum = summarize(row);
    const double thr = lb::lambda_threshold(t);
    const double freq =
        static_cast<double>(std::count_if(row.begin(), row.end(), [&](double x) { return x >= thr; })) /
        static_cast<double>(row.size());
    os << t << ',' << num(sum.mean) << ',' << num(sum.min);
    for (double q : {0.1, 0.25, 0.5, 0.75, 0.9}) os << ',' << num(quantile(row, q));
    os << ',' << num(sum.max) << ',' << num(thr) << ',' << num(freq) << ','
       << num(lb::lambda_tail_bound(static_cast<double>(m), t)) << '\n';
  }
  return {0, os.str(), {}};
}

CommandOutput cmd_curves(const Settings& s) {
  std::ostringstream os;
  if (s.name.empty() || s.name == "constants") {
    const auto m = positive(s.m, 1024, "m");
    if (!(s.alpha > 32.0)) throw UsageError("constants need alpha > 32");
    if (m < 2) throw UsageError("constants need m >= 2");
    const auto c = prob::analysis_constants(s.alpha, static_cast<double>(m));
    os << header(s, "alpha=" + num(s.alpha) + " m=" + std::to_string(m) + " kstar=" + std::to_string(c.kstar) +
                        " beta_infinity=" + num(c.beta_infinity) + " psi=" + num(c.psi) +
                        " epsilon=" + num(c.epsilon));
    os << "k,gamma,beta\n";
    for (std::size_t k = 1; k < c.gamma.size(); ++k) os << k << ',' << num(c.gamma[k]) << ',' << num(c.beta[k]) << '\n';
  } else if (s.name == "bounds") {
    os << header(s, "");
    os << "kind,expectation,zeta,eta,count,value\n";
    auto row = [&](prob::BoundKind kind, prob::BoundParams p) {
      os << prob::to_string(kind) << ',' << num(p.expectation) << ',' << num(p.zeta) << ',' << num(p.eta) << ','
         << p.count << ',' << num(prob::concentration_reference(kind, p)) << '\n';
    };
    for (double z : {1.0, 2.0, 4.0, 8.0}) row(prob::BoundKind::markov, {1.0, z, 0.0, 0});
    for (double z : {0.05, 0.1, 0.2}) row(prob::BoundKind::hoeffding, {0.0, z, 0.0, 100});
    for (double e : {0.1, 0.25, 0.5, 0.75}) row(prob::BoundKind::chernoff_upper, {10.0, 0.0, e, 0});
    for (double e : {0.1, 0.25, 0.5, 0.75}) row(prob::BoundKind::chernoff_lower, {10.0, 0.0, e, 0});
    for (double z : {0.5, 1.0, 2.0, 4.0}) row(prob::BoundKind::chernoff_poisson, {10.0, z, 0.0, 0});
  } else {
    throw UsageError("unknown curves kind '" + s.name + "' (constants, bounds)");
  }
  return {0, os.str(), {}};
}

CommandOutput run_command(const Settings& s) {
  static const std::map<std::string, CommandOutput (*)(const Settings&)> table{
      {"simulate", cmd_simulate}, {"dp", cmd_dp},         {"verify", cmd_verify},
      {"experiment", cmd_experiment}, {"lambda", cmd_lambda}, {"curves", cmd_curves}};
  const auto it = table.find(s.command);
  if (it == table.end()) throw UsageError("unknown command '" + s.command + "'");
  return it->second(s);
}

}  // namespace stosched::cli
