// One PASS/FAIL line per acceptance criterion. Exit code 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "stosched/cli/commands.hpp"
#include "stosched/core/instance.hpp"
#include "stosched/core/rng.hpp"
#include "stosched/core/stats.hpp"
#include "stosched/core/trace.hpp"
#include "stosched/lowerbound/lowerbound.hpp"
#include "stosched/simulate/engine.hpp"
#include "stosched/simulate/metrics.hpp"
#include "stosched/simulate/policies.hpp"

using namespace stosched;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> out;
  std::istringstream is(text);
  bool header = false;
  for (std::string line; std::getline(is, line);) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    std::vector<double> row;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) row.push_back(cell.empty() ? NAN : std::stod(cell));
    out.push_back(row);
  }
  return out;
}

Outcome ac1() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (lb::Count N : {2, 4, 10})
    for (lb::Count m = 1; m <= 8; ++m) {
      auto t = lb::bellman_opt1(N, m, N * m);
      const double q = 1.0 / static_cast<double>(N);
      worst = std::max(worst, std::abs(t.values[1] - q));
      for (lb::Count r = 0; r <= m; ++r)
        worst = std::max(worst, std::abs(t.values[static_cast<std::size_t>(r)] -
                                         (1.0 - std::pow(1.0 - q, static_cast<double>(r)))));
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-12 && secs < 1.0, fmt("max error %.3g, %.3f s (limit 1 s)", worst, secs)};
}

Outcome ac2() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  int cases = 0;
  for (lb::Count N = 1; N <= 6; ++N)
    for (lb::Count m = 1; m <= 3; ++m) {
      auto t = lb::bellman_opt1(N, m, 9);
      for (lb::Count r = 0; r <= 9; ++r, ++cases)
        worst = std::max(worst, std::abs(lb::brute_force_opt1(N, m, r) - t.values[static_cast<std::size_t>(r)]));
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-12 && secs < 30.0, fmt("%g cases, max difference %.3g, %.2f s (limit 30 s)", cases, worst, secs)};
}

Outcome ac3() {
  long checks = 0, failed = 0;
  double worst = 0.0;
  for (double q : {0.1, 0.3, 0.5, 0.7, 0.9})
    for (lb::Count k2 = 1; k2 <= 12; ++k2)
      for (lb::Count k1 = 0; k1 < k2; ++k1) {
        ++checks;
        if (!lb::dominance_clip_lemma_check(q, k1, k2)) ++failed;
        if (k2 < k1 + 2) continue;
        for (const auto& t : lb::clip_lemma_terms(q, k1, k2))
          for (int i = 0; i < 4; ++i)
            if (!std::isnan(t.closed[i])) worst = std::max(worst, std::abs(t.closed[i] - t.enumerated[i]));
      }
  return {failed == 0 && worst <= 1e-12,
          fmt("%g grid points, %g failures, closed-form max error %.3g", static_cast<double>(checks),
              static_cast<double>(failed), worst)};
}

Outcome ac4() {
  const std::int64_t N = 100, m = 50, trials = 10000;
  auto inst = bernoulli_instance(N, m);
  std::vector<double> ms(static_cast<std::size_t>(trials));
  long mismatches = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    auto stream = RngStream::derive(kSeed, static_cast<std::uint64_t>(t));
    auto real = sample_realization(inst, stream);
    auto pol = sim::list_scheduling_policy();
    auto tr = sim::run_policy(inst, real, *pol, AdaptivityClass::any());
    double total = 0.0;
    for (double p : real.p) total += p;
    const double mk = makespan(tr);
    if (mk != std::ceil(total / static_cast<double>(m))) ++mismatches;
    ms[static_cast<std::size_t>(t)] = mk;
  }
  auto s = summarize(ms);
  return {mismatches == 0 && s.mean <= 2.0 + 3.0 * s.half_width_95,
          fmt("%g mismatches, mean %.4f +- %.4f (bound 2)", static_cast<double>(mismatches), s.mean, s.half_width_95)};
}

Outcome ac5() {
  const auto start = std::chrono::steady_clock::now();
  const lb::Count N = 10000, m = 1000;
  const std::int64_t trials = 10000;
  auto conditional = [&](double lambda, std::uint64_t seed) {
    const auto r0 = static_cast<lb::Count>(std::llround(lambda * static_cast<double>(N * m)));
    auto next = lb::simulate_one_round(r0, m, N, trials, seed);
    std::vector<double> v(next.size());
    for (std::size_t i = 0; i < next.size(); ++i) v[i] = static_cast<double>(next[i]) / static_cast<double>(N * m);
    auto s = summarize(v);
    return std::pair{s.mean, s.stddev / std::sqrt(static_cast<double>(trials))};
  };
  const auto [e1, se1] = conditional(1.0, kSeed);
  bool ok = std::abs(e1 - 0.3679) <= 0.01;
  std::string detail = fmt("E[L1] %.5f (window 0.3579..0.3779)", e1);
  std::uint64_t sub = 1;
  for (double lambda : {0.5, 0.25}) {
    const auto [e, se] = conditional(lambda, kSeed + sub++);
    const double lo = lambda * lambda / std::exp(1.0) - 3 * se, hi = lambda * lambda / 2 + 3 * se;
    ok = ok && e >= lo && e <= hi;
    detail += fmt("; lambda %.2f: %.5f in [%.5f, %.5f]", lambda, e, lo, hi);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail += fmt("; %.1f s (limit 120 s)", secs);
  (void)se1;
  return {ok && secs < 120.0, detail};
}

Outcome ac6() {
  const lb::Count N = 100, m = 10000;
  const std::int64_t trials = 2000;
  auto samples = lb::simulate_lambda(N, m, 2, trials, kSeed);
  bool ok = true;
  std::string detail;
  for (int t = 1; t <= 2; ++t) {
    const double thr = lb::lambda_threshold(t);
    long hits = 0;
    for (double v : samples.lambda[static_cast<std::size_t>(t)]) hits += v >= thr ? 1 : 0;
    const double f = static_cast<double>(hits) / static_cast<double>(trials);
    const double bound = lb::lambda_tail_bound(static_cast<double>(m), t);
    const double se = std::sqrt(bound * (1.0 - bound) / static_cast<double>(trials));
    ok = ok && f >= bound - 3.0 * se;
    detail += std::string(t == 1 ? "" : "; ") + fmt("t=%g: frequency %.4f vs bound %.6f", t, f, bound);
  }
  return {ok, detail};
}

Outcome ac7() {
  RngStream rng(kSeed);
  long failures = 0;
  for (int i = 0; i < 1000; ++i) {
    auto inst = random_instance(rng, 200, 20);
    auto q = sim::lept_fix_assignment(inst);
    std::vector<double> load;
    for (const auto& queue : q) {
      double l = 0.0;
      for (JobId j : queue) l += inst.expected(j);
      load.push_back(l);
    }
    const double ell = *std::min_element(load.begin(), load.end());
    bool ok = true;
    for (std::size_t k = 0; k < q.size(); ++k) {
      const double n = static_cast<double>(q[k].size());
      ok = ok && load[k] >= ell - 1e-9;
      if (n >= 2) ok = ok && load[k] <= n / (n - 1) * ell + 1e-9;
    }
    failures += ok ? 0 : 1;
  }
  return {failures == 0, fmt("1000 instances, %g failures", static_cast<double>(failures))};
}

Outcome ac8() {
  const std::int64_t N = 10, runs = 1000;
  const double alpha = 33.0;
  long bad = 0, traces = 0, reassigned = 0;
  for (std::int64_t m : {64, 256}) {
    auto inst = bernoulli_instance(N, m);
    const double T = sim::compute_T(inst);
    const double delta = T, tau = delta + alpha * T;
    for (std::int64_t r = 0; r < runs; ++r) {
      auto stream = RngStream::derive(kSeed + static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(r));
      auto real = sample_realization(inst, stream);
      for (auto mode : {AdaptivityClass::delta(delta), AdaptivityClass::shift(tau)}) {
        auto pol = sim::lept_delta_alpha_policy(delta, alpha);
        auto tr = sim::run_policy(inst, real, *pol, mode);
        ++traces;
        reassigned += tr.reassignments.empty() ? 0 : 1;
        bool ok = validate_trace(inst, real, tr, AdaptivityClass::delta(delta)).empty() &&
                  validate_trace(inst, real, tr, AdaptivityClass::shift(tau)).empty();
        auto mt = sim::checkpoint_metrics(tr, inst, delta, alpha);
        for (std::size_t k = 1; k < mt.xi.size(); ++k)
          ok = ok && mt.xi[k] <= mt.xi[k - 1] + 1e-12 && mt.a[k] <= mt.a[k - 1] + 1e-12;
        bad += ok ? 0 : 1;
      }
    }
  }
  return {bad == 0, fmt("%g traces, %g invalid, %g with reassignments", static_cast<double>(traces),
                        static_cast<double>(bad), static_cast<double>(reassigned))};
}

Outcome ac9() {
  bool ok = true;
  std::string detail;
  for (lb::Count D : {2, 4}) {
    auto r = lb::delta_scaling_check(4, 2, D, 1000, kSeed + static_cast<std::uint64_t>(D));
    ok = ok && r.failures == 0;
    detail += std::string(D == 2 ? "" : "; ") +
              fmt("delta=1/%g: %g failures of 1000", static_cast<double>(D), static_cast<double>(r.failures));
  }
  return {ok, detail};
}

Outcome ac10() {
  cli::Settings g;
  g.command = "experiment";
  g.name = "growth";
  g.seed = kSeed;
  auto growth = csv_rows(cli::run_command(g).text);
  bool ok = growth.size() == 5;
  std::string detail = "growth means";
  for (std::size_t i = 0; i < growth.size(); ++i) {
    detail += fmt(" %.3f", growth[i][2]);
    if (i > 0) ok = ok && growth[i][2] >= growth[i - 1][2] - (growth[i][3] + growth[i - 1][3]);
  }
  cli::Settings p;
  p.command = "experiment";
  p.name = "policy-compare";
  p.seed = kSeed;
  auto cmp = csv_rows(cli::run_command(p).text);
  detail += "; lept-delta-alpha vs lept-fix";
  for (const auto& row : cmp) {
    if (row[0] < 64) continue;
    ok = ok && row[5] <= row[3] + std::hypot(row[4], row[6]);
    detail += fmt(" m=%g %.3f/%.3f", row[0], row[5], row[3]);
  }
  return {ok && !cmp.empty(), detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 dp closed forms", ac1},        {"AC2 balancing optimality", ac2},
      {"AC3 dominance lemma", ac3},        {"AC4 list scheduling on I_N", ac4},
      {"AC5 squaring effect", ac5},        {"AC6 quadratic tail", ac6},
      {"AC7 lept-fix loads", ac7},         {"AC8 trace validity", ac8},
      {"AC9 delta scaling", ac9},          {"AC10 growth trend", ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
