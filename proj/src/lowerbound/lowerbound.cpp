#include "stosched/lowerbound/lowerbound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "stosched/core/instance.hpp"
#include "stosched/core/parallel.hpp"
#include "stosched/prob/discrete_law.hpp"
#include "stosched/prob/distributions.hpp"

namespace stosched::lb {

namespace {

double q_of(Count N) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  return 1.0 / static_cast<double>(N);
}

// (1 - q)^e, 0^0 = 1.
double power(double base, Count e) { return e <= 0 ? 1.0 : std::pow(base, static_cast<double>(e)); }

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// P(some long job among r) = 1 - (1 - 1/N)^r.
double round_cost(Count N, Count r) {
  if (N == 1) return r > 0 ? 1.0 : 0.0;
  return -std::expm1(static_cast<double>(r) * std::log1p(-1.0 / static_cast<double>(N)));
}

}  // namespace

std::vector<Count> balanced_assignment(Count r, Count m) {
  if (r < 0) throw std::invalid_argument("balanced_assignment: r must be nonnegative");
  if (m < 1) throw std::invalid_argument("balanced_assignment: m must be at least 1");
  std::vector<Count> ks(static_cast<std::size_t>(m), r / m);
  for (Count i = 0; i < r % m; ++i) ++ks[static_cast<std::size_t>(i)];
  return ks;
}

GeomClipDist::GeomClipDist(Count k, double q) : k_(k), q_(q) {
  if (k < 0) throw std::invalid_argument("GeomClipDist: k must be nonnegative");
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("GeomClipDist: q must lie in (0, 1]");
  if (k == 0) {
    pmf_ = {1.0};
    return;
  }
  pmf_.assign(static_cast<std::size_t>(k), 0.0);
  pmf_[0] = power(1.0 - q, k - 1);
  for (Count j = 1; j < k; ++j) pmf_[static_cast<std::size_t>(j)] = power(1.0 - q, k - j - 1) * q;
}

double GeomClipDist::mean() const {
  double acc = 0.0;
  for (std::size_t j = 0; j < pmf_.size(); ++j) acc += static_cast<double>(j) * pmf_[j];
  return acc;
}

double RemainingDist::mean() const {
  double acc = 0.0;
  for (std::size_t s = 0; s < pmf.size(); ++s) acc += static_cast<double>(s) * pmf[s];
  return acc;
}

double RemainingDist::total() const { return std::accumulate(pmf.begin(), pmf.end(), 0.0); }

RemainingDist remaining_after_round(std::span<const Count> ks, Count N) {
  const double q = q_of(N);
  std::map<Count, Count> shares;  // k -> number of machines, only k >= 2 matter
  for (Count k : ks) {
    if (k < 0) throw std::invalid_argument("remaining_after_round: negative share");
    if (k >= 2) ++shares[k];
  }
  std::vector<double> acc{1.0};
  for (const auto& [k, count] : shares) {
    const GeomClipDist clip(k, q);
    for (Count c = 0; c < count; ++c) acc = convolve(acc, clip.pmf());
  }
  return RemainingDist{std::move(acc)};
}

BellmanTable bellman_opt1(Count N, Count m, Count r_max) {
  q_of(N);
  if (m < 1) throw std::invalid_argument("bellman_opt1: m must be at least 1");
  if (r_max < 0) throw std::invalid_argument("bellman_opt1: r_max must be nonnegative");
  BellmanTable table{N, m, std::vector<double>(static_cast<std::size_t>(r_max + 1), 0.0)};
  auto& J = table.values;
  for (Count r = 1; r <= r_max; ++r) {
    const auto ks = balanced_assignment(r, m);
    const auto next = remaining_after_round(ks, N);
    double future = 0.0;
    for (std::size_t s = 1; s < next.pmf.size(); ++s) future += next.pmf[s] * J[s];
    J[static_cast<std::size_t>(r)] = round_cost(N, r) + future;
  }
  return table;
}

double brute_force_opt1(Count N, Count m, Count r, BruteForceLimits limits) {
  const double q = q_of(N);
  if (m < 1 || r < 0) throw std::invalid_argument("brute_force_opt1: need m >= 1 and r >= 0");
  if (r > limits.max_r || m > limits.max_m)
    throw std::length_error("brute_force_opt1: instance exceeds the enumeration limits");

  std::vector<double> J(static_cast<std::size_t>(r + 1), 0.0);
  for (Count rr = 1; rr <= r; ++rr) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<Count> k(static_cast<std::size_t>(m), 0);

    // E[J(R)] for the current composition k, by walking every joint outcome.
    // Machine i with share k_i ends with k_i - g left when G_i = g <= k_i,
    // and with none left when G_i > k_i.
    auto expected_future = [&]() {
      double acc = 0.0;
      auto walk = [&](auto&& self, std::size_t i, Count left, double prob) -> void {
        if (i == k.size()) {
          acc += prob * J[static_cast<std::size_t>(left)];
          return;
        }
        const Count ki = k[i];
        for (Count g = 1; g <= ki; ++g) self(self, i + 1, left + ki - g, prob * power(1.0 - q, g - 1) * q);
        self(self, i + 1, left, prob * power(1.0 - q, ki));
      };
      walk(walk, 0, 0, 1.0);
      return acc;
    };

    // Every ordered composition of rr into m nonnegative parts.
    auto compose = [&](auto&& self, std::size_t i, Count left) -> void {
      if (i + 1 == k.size()) {
        k[i] = left;
        best = std::min(best, expected_future());
        return;
      }
      for (Count v = 0; v <= left; ++v) {
        k[i] = v;
        self(self, i + 1, left - v);
      }
    };
    compose(compose, 0, rr);
    J[static_cast<std::size_t>(rr)] = 1.0 - power(1.0 - q, rr) + best;
  }
  return J[static_cast<std::size_t>(r)];
}

Count sample_round(Count r, Count m, Count N, RngStream& stream) {
  const double q = q_of(N);
  const Count base = r / m, extra = r % m;
  Count left = 0;
  for (Count i = 0; i < m; ++i) {
    const Count k = base + (i < extra ? 1 : 0);
    if (k == 0) break;
    const Count g = prob::sample_geometric(q, stream);
    if (g < k) left += k - g;
  }
  return left;
}

LambdaSamples simulate_lambda(Count N, Count m, int t_max, std::int64_t trials, std::uint64_t seed,
                              unsigned threads) {
  q_of(N);
  if (m < 1 || t_max < 0 || trials < 1) throw std::invalid_argument("simulate_lambda: bad arguments");
  LambdaSamples out;
  out.N = N;
  out.m = m;
  const auto T = static_cast<std::size_t>(t_max) + 1;
  out.remaining.assign(T, std::vector<Count>(static_cast<std::size_t>(trials), 0));
  out.lambda.assign(T, std::vector<double>(static_cast<std::size_t>(trials), 0.0));
  const Count total = N * m;
  parallel_for(trials, threads, [&](std::int64_t i) {
    auto stream = RngStream::derive(seed, static_cast<std::uint64_t>(i));
    Count r = total;
    for (std::size_t t = 0; t < T; ++t) {
      if (t > 0 && r > 0) r = sample_round(r, m, N, stream);
      out.remaining[t][static_cast<std::size_t>(i)] = r;
      out.lambda[t][static_cast<std::size_t>(i)] = static_cast<double>(r) / static_cast<double>(total);
    }
  });
  return out;
}

std::vector<Count> simulate_one_round(Count r0, Count m, Count N, std::int64_t trials, std::uint64_t seed,
                                      unsigned threads) {
  q_of(N);
  if (m < 1 || r0 < 0 || trials < 1) throw std::invalid_argument("simulate_one_round: bad arguments");
  std::vector<Count> out(static_cast<std::size_t>(trials));
  parallel_for(trials, threads, [&](std::int64_t i) {
    auto stream = RngStream::derive(seed, static_cast<std::uint64_t>(i));
    out[static_cast<std::size_t>(i)] = sample_round(r0, m, N, stream);
  });
  return out;
}

std::vector<double> simulate_opt1_makespans(Count N, Count m, std::int64_t trials, std::uint64_t seed,
                                            unsigned threads) {
  const double q = q_of(N);
  if (m < 1 || trials < 1) throw std::invalid_argument("simulate_opt1_makespans: bad arguments");
  std::vector<double> out(static_cast<std::size_t>(trials));
  parallel_for(trials, threads, [&](std::int64_t i) {
    auto stream = RngStream::derive(seed, static_cast<std::uint64_t>(i));
    Count r = N * m;
    Count round = 0, makespan = 0;
    while (r > 0) {
      const Count base = r / m, extra = r % m;
      Count left = 0;
      bool long_started = false;
      for (Count mi = 0; mi < m; ++mi) {
        const Count k = base + (mi < extra ? 1 : 0);
        if (k == 0) break;
        const Count g = prob::sample_geometric(q, stream);
        if (g <= k) long_started = true;
        if (g < k) left += k - g;
      }
      if (long_started) makespan = round + 1;
      r = left;
      ++round;
    }
    out[static_cast<std::size_t>(i)] = static_cast<double>(makespan);
  });
  return out;
}

double lambda_tail_bound(double m, int t) {
  return std::pow(-std::expm1(-2.0 * std::sqrt(m)), static_cast<double>(t));
}

double lambda_threshold(int t) { return std::pow(2.0 * std::exp(1.0), 1.0 - std::ldexp(1.0, t)); }

bool dominance_clip_lemma_check(double q, Count k1, Count k2) {
  if (k1 < 0 || k1 >= k2) throw std::invalid_argument("dominance check needs 0 <= k1 < k2");
  using prob::DiscreteLaw;
  const auto left = DiscreteLaw::clipped_geometric(k1, q).convolve(DiscreteLaw::clipped_geometric(k2, q));
  const auto right =
      DiscreteLaw::clipped_geometric(k1 + 1, q).convolve(DiscreteLaw::clipped_geometric(k2 - 1, q));
  return prob::stoch_dominates(left, right);
}

bool dominance_clip_corollary_check(double q, Count k1, Count k2) {
  if (k1 < 0 || k1 >= k2) throw std::invalid_argument("dominance check needs 0 <= k1 < k2");
  using prob::DiscreteLaw;
  auto law = [q](Count k) { return DiscreteLaw::from_pmf(GeomClipDist(k, q).pmf()); };
  const auto before = law(k1).convolve(law(k2));
  const auto after = law(k1 + 1).convolve(law(k2 - 1));
  return prob::stoch_dominates(after, before);
}

std::vector<ClipLemmaTerms> clip_lemma_terms(double q, Count k1, Count k2) {
  if (k1 < 0 || k2 < k1 + 2) throw std::invalid_argument("clip_lemma_terms needs 0 <= k1 and k2 >= k1 + 2");
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("clip_lemma_terms: q must lie in (0, 1]");
  const double s = 1.0 - q;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto pmf = [&](Count g) { return power(s, g - 1) * q; };
  const double pU1 = power(s, k1), pU2 = power(s, k2 - 1);

  std::vector<ClipLemmaTerms> out;
  for (Count a = 0; a <= k1 + k2; ++a) {
    ClipLemmaTerms t;
    t.alpha = a;
    double e[4] = {0.0, 0.0, 0.0, 0.0};
    for (Count g2 = 1; g2 <= k2 - 1; ++g2) {
      if (k1 + 1 + g2 >= a) e[0] += pU1 * pmf(g2);
      if (k1 + g2 >= a) e[1] += pU1 * pmf(g2);
    }
    for (Count g1 = 1; g1 <= k1; ++g1) {
      if (g1 + k2 - 1 >= a) e[2] += pmf(g1) * pU2;
      if (g1 + k2 >= a) e[3] += pmf(g1) * pU2;
    }
    std::copy(e, e + 4, t.enumerated);

    t.interval[0] = pU1 * prob::geom_interval(q, a - k1 - 1, k2 - 1);
    t.interval[1] = pU1 * prob::geom_interval(q, a - k1, k2 - 1);
    t.interval[2] = pU2 * prob::geom_interval(q, a - k2 + 1, k1);
    t.interval[3] = pU2 * prob::geom_interval(q, a - k2, k1);

    if (a <= k2) {
      t.regime = 1;
      const double v = pU2 * (1.0 - power(s, k1));
      t.closed[0] = nan;
      t.closed[1] = nan;
      t.closed[2] = v;
      t.closed[3] = v;
    } else if (a < k1 + k2) {
      t.regime = 2;
      const double tail = power(s, k1 + k2 - 1);
      t.closed[0] = power(s, a - 2) - tail;
      t.closed[1] = power(s, a - 1) - tail;
      t.closed[2] = power(s, a - 1) - tail;
      t.closed[3] = power(s, a - 2) - tail;
    } else {
      t.regime = 3;
      t.closed[0] = power(s, a - 2) * q;
      t.closed[1] = 0.0;
      t.closed[2] = 0.0;
      t.closed[3] = power(s, a - 2) * q;
    }
    out.push_back(t);
  }
  return out;
}

DeltaScalingTrial delta_scaling_trial(Count N, Count m, Count D, std::span<const double> p) {
  if (N < 1 || m < 1 || D < 1) throw std::invalid_argument("delta_scaling_trial: bad arguments");
  if (static_cast<Count>(p.size()) != N * m) throw std::invalid_argument("delta_scaling_trial: realization size");

  struct Batch {
    Count round;
    Count machine;
    std::vector<Count> jobs;
  };
  std::vector<Batch> batches;

  // Delta-active run in ticks of delta; a long job occupies D ticks.
  std::vector<Count> pool(p.size());
  std::iota(pool.begin(), pool.end(), Count{0});
  std::vector<Count> busy_until(static_cast<std::size_t>(m), 0);
  Count makespan_ticks = 0;
  for (Count round = 0; !pool.empty(); ++round) {
    std::vector<Count> free;
    for (Count i = 0; i < m; ++i)
      if (busy_until[static_cast<std::size_t>(i)] <= round) free.push_back(i);
    if (free.empty()) continue;
    const auto ks = balanced_assignment(static_cast<Count>(pool.size()), static_cast<Count>(free.size()));
    std::vector<Count> back;
    std::size_t cursor = 0;
    for (std::size_t s = 0; s < free.size(); ++s) {
      Batch batch{round, free[s], {}};
      bool blocked = false;
      for (Count c = 0; c < ks[s]; ++c) {
        const Count j = pool[cursor++];
        if (blocked) {
          back.push_back(j);
          continue;
        }
        batch.jobs.push_back(j);
        if (p[static_cast<std::size_t>(j)] > 0.0) {
          blocked = true;
          busy_until[static_cast<std::size_t>(free[s])] = round + D;
          makespan_ticks = std::max(makespan_ticks, round + D);
        }
      }
      if (!batch.jobs.empty()) batches.push_back(std::move(batch));
    }
    std::sort(back.begin(), back.end());
    pool = std::move(back);
  }

  // Spacing-1 replay: batch of round k starts at time k on the same machine.
  Count last_batch = 0;
  std::vector<double> free_at(static_cast<std::size_t>(m), 0.0);
  double long_one = 0.0, all_one = 0.0;
  bool replay_valid = true;
  for (const auto& b : batches) {
    last_batch = std::max(last_batch, b.round);
    double t = static_cast<double>(b.round);
    auto& fa = free_at[static_cast<std::size_t>(b.machine)];
    if (fa > t) replay_valid = false;
    for (Count j : b.jobs) {
      t += p[static_cast<std::size_t>(j)];
      if (p[static_cast<std::size_t>(j)] > 0.0) long_one = std::max(long_one, t);
    }
    fa = t;
    all_one = std::max(all_one, t);
  }

  const double d = static_cast<double>(D);
  DeltaScalingTrial out;
  out.any_long = std::any_of(p.begin(), p.end(), [](double x) { return x > 0.0; });
  out.makespan_delta = static_cast<double>(makespan_ticks) / d;
  out.makespan_delta_all = static_cast<double>(std::max(makespan_ticks, last_batch)) / d;
  out.makespan_one = long_one;
  out.makespan_one_all = all_one;
  out.replay_valid = replay_valid;
  if (out.any_long) {
    // M_1 = D (M_delta - 1) + 1, i.e. M_1 = ticks - D + 1.
    out.identity_holds = long_one == static_cast<double>(makespan_ticks - D + 1);
  } else {
    out.identity_holds = long_one == 0.0 && makespan_ticks == 0 && all_one == 0.0;
  }
  out.bound_holds = all_one <= d * out.makespan_delta_all;
  return out;
}

DeltaScalingReport delta_scaling_check(Count N, Count m, Count D, std::int64_t trials, std::uint64_t seed,
                                       unsigned threads) {
  if (trials < 1) throw std::invalid_argument("delta_scaling_check: trials must be at least 1");
  const Instance inst = bernoulli_instance(N, m);
  DeltaScalingReport report{N, m, D, std::vector<DeltaScalingTrial>(static_cast<std::size_t>(trials)), 0};
  parallel_for(trials, threads, [&](std::int64_t i) {
    auto stream = RngStream::derive(seed, static_cast<std::uint64_t>(i));
    const auto real = sample_realization(inst, stream);
    report.trials[static_cast<std::size_t>(i)] = delta_scaling_trial(N, m, D, real.p);
  });
  for (const auto& t : report.trials) {
    report.failures += t.identity_holds && t.bound_holds && t.replay_valid ? 0 : 1;
    report.trailing_vanishing += t.makespan_one_all > t.makespan_one ? 1 : 0;
  }
  return report;
}

}  // namespace stosched::lb
