#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stosched/core/rng.hpp"

namespace stosched::lb {

using Count = std::int64_t;

/// r jobs spread over m machines: each gets floor(r/m) or ceil(r/m), larger
/// shares first.
std::vector<Count> balanced_assignment(Count r, Count m);

/// Law of (k - G)_+ for G ~ Geom(q); pmf()[j] = P((k - G)_+ = j), j = 0..max(k-1, 0).
class GeomClipDist {
 public:
  GeomClipDist(Count k, double q);
  Count k() const { return k_; }
  double q() const { return q_; }
  const std::vector<double>& pmf() const { return pmf_; }
  double mean() const;

 private:
  Count k_;
  double q_;
  std::vector<double> pmf_;
};

/// Law of the number of remaining jobs; pmf[s] = P(R = s).
struct RemainingDist {
  std::vector<double> pmf;
  double mean() const;
  double total() const;
  Count max_support() const { return static_cast<Count>(pmf.size()) - 1; }
};

/// Exact law of sum_i (ks[i] - G_i)_+ with i.i.d. G_i ~ Geom(1/N).
RemainingDist remaining_after_round(std::span<const Count> ks, Count N);

/// Optimal expected cost-to-go of the 1-active policy on I_N, indexed by the
/// number of remaining jobs.
struct BellmanTable {
  Count N = 0;
  Count m = 0;
  std::vector<double> values;  // values[r] = J*(r)
};

/// J*(0) = 0 and J*(r) = 1 - (1 - 1/N)^r + E[J*(R)] with R the remaining
/// count after a balanced round of r jobs.
BellmanTable bellman_opt1(Count N, Count m, Count r_max);

/// Size limits for the brute-force oracle.
struct BruteForceLimits {
  Count max_r = 9;
  Count max_m = 3;
};

/// Minimum of the Bellman right-hand side over every assignment (k_1..k_m)
/// with sum r, recursively for all smaller counts. The remaining-count law of
/// each assignment is built by enumerating joint machine outcomes, without
/// convolution. Throws std::length_error beyond `limits`.
double brute_force_opt1(Count N, Count m, Count r, BruteForceLimits limits = {});

/// One balanced round from r remaining jobs: returns the new remaining count.
/// Draws one geometric per machine with a positive share.
Count sample_round(Count r, Count m, Count N, RngStream& stream);

/// Lambda_t = R_t / (N m) for t = 0..t_max under the balancing 1-active
/// policy; lambda[t][trial]. Trial i uses RngStream::derive(seed, i).
struct LambdaSamples {
  Count N = 0;
  Count m = 0;
  std::vector<std::vector<double>> lambda;
  std::vector<std::vector<Count>> remaining;  // R_t, same layout
};

LambdaSamples simulate_lambda(Count N, Count m, int t_max, std::int64_t trials, std::uint64_t seed,
                              unsigned threads = 0);

/// Remaining counts after one balanced round started from r0 jobs, one per trial.
std::vector<Count> simulate_one_round(Count r0, Count m, Count N, std::int64_t trials, std::uint64_t seed,
                                      unsigned threads = 0);

/// Makespan of the balancing 1-active policy on I_N, one value per trial
/// (estimates OPT_1 = J*(Nm)).
std::vector<double> simulate_opt1_makespans(Count N, Count m, std::int64_t trials, std::uint64_t seed,
                                            unsigned threads = 0);

/// (1 - e^{-2 sqrt m})^t, the lower bound on P(Lambda_t >= (2e)^{1-2^t}).
double lambda_tail_bound(double m, int t);
/// (2e)^{1-2^t}.
double lambda_threshold(int t);

/// Exact check of min(k1,G1) + min(k2,G2) being dominated by
/// min(k1+1,G1) + min(k2-1,G2), G_i ~ Geom(q). Requires k1 < k2, k1 >= 0.
bool dominance_clip_lemma_check(double q, Count k1, Count k2);

/// Same move seen on remaining counts: (k1-G1)_+ + (k2-G2)_+ dominates
/// (k1+1-G1)_+ + (k2-1-G2)_+.
bool dominance_clip_corollary_check(double q, Count k1, Count k2);

/// Terms p1..p4 of the dominance argument at threshold alpha:
///   p1 = P(A, U1, L2), p2 = P(B, U1, L2), p3 = P(A, L1, U2), p4 = P(B, L1, U2)
/// with A = {min(G1,k1+1) + min(G2,k2-1) >= alpha}, B = {min(G1,k1) + min(G2,k2) >= alpha},
/// L1 = {G1 <= k1}, U1 = {G1 >= k1+1}, L2 = {G2 <= k2-1}, U2 = {G2 >= k2}.
struct ClipLemmaTerms {
  Count alpha = 0;
  int regime = 0;            // 1: alpha <= k2, 2: k2 < alpha < k1+k2, 3: alpha = k1+k2
  double enumerated[4]{};    // joint enumeration
  double interval[4]{};      // product form with P(a <= G <= b)
  double closed[4]{};        // per-regime closed form; NaN where none is given
};

/// One entry per alpha = 0..k1+k2. Requires k2 >= k1 + 2, k1 >= 0.
std::vector<ClipLemmaTerms> clip_lemma_terms(double q, Count k1, Count k2);

/// Pathwise comparison of the balancing delta-active policy (delta = 1/D)
/// with its spacing-1 replay on one realization of I_N.
/// Makespans are completion times of the last long job; the `_all` variants
/// also count vanishing jobs (max over every completion time).
struct DeltaScalingTrial {
  bool any_long = false;
  double makespan_delta = 0.0;
  double makespan_one = 0.0;
  double makespan_delta_all = 0.0;
  double makespan_one_all = 0.0;
  bool replay_valid = false;    // no batch starts before its machine is free
  bool identity_holds = false;  // makespan_one = (makespan_delta - 1)/delta + 1, or both 0
  bool bound_holds = false;     // makespan_one_all <= makespan_delta_all / delta
};

struct DeltaScalingReport {
  Count N = 0;
  Count m = 0;
  Count D = 0;
  std::vector<DeltaScalingTrial> trials;
  std::int64_t failures = 0;        // identity or bound broken, or invalid replay
  std::int64_t trailing_vanishing = 0;  // makespan_one_all > makespan_one
};

/// One realization: the delta-active balancing run (rounds at multiples of
/// delta, only machines with no long job running receive work) records the
/// job set of every (round, machine); the replay executes round k at time k
/// from the same job sets.
DeltaScalingTrial delta_scaling_trial(Count N, Count m, Count D, std::span<const double> p);

DeltaScalingReport delta_scaling_check(Count N, Count m, Count D, std::int64_t trials, std::uint64_t seed,
                                       unsigned threads = 0);

}  // namespace stosched::lb
