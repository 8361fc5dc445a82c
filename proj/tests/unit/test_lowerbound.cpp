#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "stosched/core/stats.hpp"
#include "stosched/lowerbound/lowerbound.hpp"

using namespace stosched;
using namespace stosched::lb;

namespace {

double geom(double q, Count g) { return std::pow(1.0 - q, static_cast<double>(g - 1)) * q; }

// Law of sum_i (k_i - G_i)_+ by summing over every joint outcome of the
// clipped geometrics. Outcomes with G_i >= k_i are lumped into one value.
std::vector<double> enumerate_remaining(const std::vector<Count>& ks, Count N) {
  const double q = 1.0 / static_cast<double>(N);
  Count total = 0;
  for (Count k : ks) total += k;
  std::vector<double> pmf(static_cast<std::size_t>(total + 1), 0.0);
  std::vector<Count> g(ks.size(), 1);
  while (true) {
    double p = 1.0;
    Count r = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const Count k = ks[i];
      if (k == 0) continue;
      if (g[i] < k) {
        p *= geom(q, g[i]);
        r += k - g[i];
      } else {
        p *= std::pow(1.0 - q, static_cast<double>(k - 1));
      }
    }
    pmf[static_cast<std::size_t>(r)] += p;
    std::size_t i = 0;
    while (i < ks.size()) {
      if (g[i] < std::max<Count>(ks[i], 1)) {
        ++g[i];
        break;
      }
      g[i] = 1;
      ++i;
    }
    if (i == ks.size()) break;
  }
  return pmf;
}

// P(min(k1,G1) + min(k2,G2) >= z) by direct double sum, truncated far out.
double clipped_pair_tail(double q, Count k1, Count k2, Count z) {
  double s = 0.0;
  const Count K = 300;
  for (Count g1 = 1; g1 <= K; ++g1)
    for (Count g2 = 1; g2 <= K; ++g2)
      if (std::min(k1, g1) + std::min(k2, g2) >= z) s += geom(q, g1) * geom(q, g2);
  return s;
}

}  // namespace

TEST_CASE("balanced assignment") {
  CHECK(balanced_assignment(5, 2) == std::vector<Count>{3, 2});
  CHECK(balanced_assignment(6, 3) == std::vector<Count>{2, 2, 2});
  CHECK(balanced_assignment(0, 4) == std::vector<Count>{0, 0, 0, 0});
  for (Count m = 1; m <= 7; ++m)
    for (Count r = 0; r <= 40; ++r) {
      auto k = balanced_assignment(r, m);
      CHECK(static_cast<Count>(k.size()) == m);
      CHECK(std::accumulate(k.begin(), k.end(), Count{0}) == r);
      CHECK(*std::max_element(k.begin(), k.end()) - *std::min_element(k.begin(), k.end()) <= 1);
      CHECK(std::is_sorted(k.rbegin(), k.rend()));
    }
}

TEST_CASE("clipped geometric remainder") {
  GeomClipDist one(1, 0.3);
  REQUIRE(one.pmf().size() == 1);
  CHECK(one.pmf()[0] == 1.0);
  GeomClipDist two(2, 0.5);
  CHECK(two.pmf()[0] == doctest::Approx(0.5));
  CHECK(two.pmf()[1] == doctest::Approx(0.5));
  for (double q : {0.05, 0.5, 1.0})
    for (Count k = 0; k <= 15; ++k) {
      GeomClipDist d(k, q);
      double mass = 0.0, mean = 0.0;
      for (std::size_t j = 0; j < d.pmf().size(); ++j) {
        mass += d.pmf()[j];
        mean += static_cast<double>(j) * d.pmf()[j];
      }
      CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(d.mean() == doctest::Approx(mean).epsilon(1e-12));
      double direct = 0.0;
      for (Count g = 1; g < k; ++g) direct += static_cast<double>(k - g) * geom(q, g);
      CHECK(d.mean() == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("remaining after one round") {
  auto a = remaining_after_round(std::vector<Count>{1}, 7);
  REQUIRE(a.pmf.size() >= 1);
  CHECK(a.pmf[0] == doctest::Approx(1.0));
  auto b = remaining_after_round(std::vector<Count>{2}, 2);
  CHECK(b.pmf[0] == doctest::Approx(0.5));
  CHECK(b.pmf[1] == doctest::Approx(0.5));
  auto c = remaining_after_round(std::vector<Count>{2, 2}, 2);
  CHECK(c.pmf[0] == doctest::Approx(0.25));
  CHECK(c.pmf[1] == doctest::Approx(0.5));
  CHECK(c.pmf[2] == doctest::Approx(0.25));

  for (Count N : {2, 3, 5})
    for (const auto& ks : std::vector<std::vector<Count>>{{3, 1}, {4, 4, 0}, {5, 2, 3}, {1, 1, 1}, {6}}) {
      auto d = remaining_after_round(ks, N);
      auto e = enumerate_remaining(ks, N);
      CHECK(d.total() == doctest::Approx(1.0).epsilon(1e-12));
      for (std::size_t s = 0; s < e.size(); ++s) {
        const double got = s < d.pmf.size() ? d.pmf[s] : 0.0;
        CHECK(got == doctest::Approx(e[s]).epsilon(1e-12));
      }
    }
}

TEST_CASE("one round sampling matches the exact law") {
  for (Count N : {2, 3, 4})
    for (Count m : {1, 2, 3}) {
      const Count r0 = N * m;
      auto exact = remaining_after_round(balanced_assignment(r0, m), N);
      auto draws = simulate_one_round(r0, m, N, 100000, 4242 + static_cast<std::uint64_t>(N * 10 + m), 1);
      std::vector<long> counts(exact.pmf.size(), 0);
      for (Count r : draws) {
        REQUIRE(r >= 0);
        REQUIRE(r < static_cast<Count>(counts.size()));
        counts[static_cast<std::size_t>(r)] += 1;
      }
      auto c = chi_square(counts, exact.pmf);
      CHECK(c.statistic < chi_square_critical(c.dof, 3.29));
    }
}

TEST_CASE("bellman values") {
  for (Count N : {2, 4, 10})
    for (Count m : {1, 2, 3, 5, 8}) {
      auto t = bellman_opt1(N, m, 3 * N * m);
      CHECK(t.values[0] == 0.0);
      CHECK(t.values[1] == doctest::Approx(1.0 / static_cast<double>(N)).epsilon(1e-12));
      for (Count r = 1; r <= m; ++r)
        CHECK(t.values[static_cast<std::size_t>(r)] ==
              doctest::Approx(1.0 - std::pow(1.0 - 1.0 / static_cast<double>(N), static_cast<double>(r))).epsilon(1e-12));
      for (std::size_t r = 1; r < t.values.size(); ++r) CHECK(t.values[r] >= t.values[r - 1] - 1e-12);
    }
}

TEST_CASE("bellman equals the brute-force minimum") {
  for (Count N = 1; N <= 6; ++N)
    for (Count m = 1; m <= 3; ++m) {
      auto t = bellman_opt1(N, m, 9);
      for (Count r = 0; r <= 9; ++r)
        CHECK(brute_force_opt1(N, m, r) == doctest::Approx(t.values[static_cast<std::size_t>(r)]).epsilon(1e-12));
    }
  CHECK(brute_force_opt1(5, 3, 0) == 0.0);
  CHECK(brute_force_opt1(5, 2, 1) == doctest::Approx(0.2));
  CHECK_THROWS_AS(brute_force_opt1(2, 4, 3), std::length_error);
  CHECK_THROWS_AS(brute_force_opt1(2, 2, 10), std::length_error);
}

TEST_CASE("simulated makespans agree with the Bellman value") {
  const Count N = 4, m = 3;
  auto t = bellman_opt1(N, m, N * m);
  auto ms = simulate_opt1_makespans(N, m, 20000, 5, 1);
  auto s = summarize(ms);
  CHECK(std::abs(s.mean - t.values.back()) <= 4.0 * s.stddev / std::sqrt(static_cast<double>(ms.size())));
}

TEST_CASE("lambda paths") {
  auto a = simulate_lambda(20, 30, 4, 200, 3, 1);
  auto b = simulate_lambda(20, 30, 4, 200, 3, 3);
  CHECK(a.lambda == b.lambda);
  REQUIRE(a.lambda.size() == 5);
  for (double v : a.lambda[0]) CHECK(v == 1.0);
  for (std::size_t t = 1; t < a.lambda.size(); ++t)
    for (std::size_t i = 0; i < a.lambda[t].size(); ++i) {
      CHECK(a.lambda[t][i] <= a.lambda[t - 1][i]);
      CHECK(a.remaining[t][i] == static_cast<Count>(std::llround(a.lambda[t][i] * 600)));
    }
  CHECK(lambda_threshold(1) == doctest::Approx(1.0 / (2.0 * std::exp(1.0))));
  CHECK(lambda_threshold(2) == doctest::Approx(std::pow(2.0 * std::exp(1.0), -3.0)));
  CHECK(lambda_tail_bound(100.0, 2) == doctest::Approx(std::pow(1.0 - std::exp(-20.0), 2)));
}

TEST_CASE("clipped geometric dominance") {
  CHECK(dominance_clip_lemma_check(0.5, 1, 3));
  CHECK(dominance_clip_corollary_check(0.5, 1, 3));
  for (Count k1 = 0; k1 < 6; ++k1)
    for (Count k2 = k1 + 1; k2 < 8; ++k2) CHECK(dominance_clip_lemma_check(1.0, k1, k2));
  for (double q : {0.15, 0.5, 0.8})
    for (Count k1 = 0; k1 <= 4; ++k1)
      for (Count k2 = k1 + 1; k2 <= 5; ++k2) {
        bool holds = true;
        for (Count z = 0; z <= k1 + k2 + 1; ++z)
          holds = holds && clipped_pair_tail(q, k1, k2, z) <= clipped_pair_tail(q, k1 + 1, k2 - 1, z) + 1e-12;
        CHECK(holds == dominance_clip_lemma_check(q, k1, k2));
        CHECK(holds);
      }
  CHECK_THROWS(dominance_clip_lemma_check(0.5, 3, 3));
}

TEST_CASE("clip lemma terms") {
  for (double q : {0.1, 0.5, 0.9})
    for (Count k1 = 0; k1 <= 5; ++k1)
      for (Count k2 = k1 + 2; k2 <= 8; ++k2) {
        auto terms = clip_lemma_terms(q, k1, k2);
        REQUIRE(static_cast<Count>(terms.size()) == k1 + k2 + 1);
        for (const auto& t : terms) {
          // Independent joint sum over the four events.
          double p[4] = {0, 0, 0, 0};
          for (Count g1 = 1; g1 <= 400; ++g1)
            for (Count g2 = 1; g2 <= 400; ++g2) {
              const double w = geom(q, g1) * geom(q, g2);
              const bool A = std::min(g1, k1 + 1) + std::min(g2, k2 - 1) >= t.alpha;
              const bool B = std::min(g1, k1) + std::min(g2, k2) >= t.alpha;
              const bool L1 = g1 <= k1, U1 = g1 >= k1 + 1, L2 = g2 <= k2 - 1, U2 = g2 >= k2;
              if (A && U1 && L2) p[0] += w;
              if (B && U1 && L2) p[1] += w;
              if (A && L1 && U2) p[2] += w;
              if (B && L1 && U2) p[3] += w;
            }
          for (int i = 0; i < 4; ++i) {
            CHECK(t.enumerated[i] == doctest::Approx(p[i]).epsilon(1e-10));
            CHECK(t.interval[i] == doctest::Approx(p[i]).epsilon(1e-10));
            if (!std::isnan(t.closed[i])) CHECK(t.closed[i] == doctest::Approx(p[i]).epsilon(1e-10));
          }
          CHECK(p[0] + p[2] >= p[1] + p[3] - 1e-12);
        }
      }
}

TEST_CASE("delta scaling") {
  SUBCASE("nothing long") {
    std::vector<double> zeros(8, 0.0);
    auto t = delta_scaling_trial(4, 2, 2, zeros);
    CHECK(t.makespan_delta == 0.0);
    CHECK(t.makespan_one == 0.0);
    CHECK(t.identity_holds);
  }
  SUBCASE("unit spacing is its own replay") {
    auto r = delta_scaling_check(4, 2, 1, 500, 8, 1);
    CHECK(r.failures == 0);
    for (const auto& t : r.trials) CHECK(t.makespan_one == t.makespan_delta);
  }
  SUBCASE("coupled trials") {
    for (Count D : {2, 4}) {
      auto r = delta_scaling_check(4, 2, D, 1000, 21, 1);
      CHECK(r.failures == 0);
      for (const auto& t : r.trials) {
        CHECK(t.replay_valid);
        CHECK(t.identity_holds);
        CHECK(t.bound_holds);
        if (t.any_long)
          CHECK(t.makespan_one == doctest::Approx((t.makespan_delta - 1.0) * static_cast<double>(D) + 1.0));
      }
    }
  }
  SUBCASE("one long job") {
    std::vector<double> p(8, 0.0);
    p[5] = 1.0;
    auto t = delta_scaling_trial(4, 2, 2, p);
    CHECK(t.any_long);
    CHECK(t.identity_holds);
    CHECK(t.makespan_delta >= 1.0);
  }
}
