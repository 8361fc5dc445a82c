#pragma once

#include <cstdint>
#include <limits>

#include "stosched/core/rng.hpp"

namespace stosched::prob {

inline constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

// Geometric law on {1, 2, ...}: number of draws up to and including the first
// success, success probability q in (0, 1].

double geom_pmf(double q, std::int64_t g);
/// P(G <= g).
double geom_cdf(double q, std::int64_t g);
/// P(G >= g).
double geom_tail(double q, std::int64_t g);
/// P(a <= G <= b), b may be kInfinity. Piecewise closed form.
double geom_interval(double q, std::int64_t a, std::int64_t b);

/// Inverse-transform draw: 1 + floor(log U / log(1 - q)), U uniform on (0, 1].
std::int64_t sample_geometric(double q, RngStream& stream);

// Binomial law Bin(n, p), evaluated through log-gamma.

double binom_pmf(std::int64_t n, double p, std::int64_t k);
/// P(X <= k); 0 for k < 0 and 1 for k >= n.
double binom_cdf(std::int64_t n, double p, std::int64_t k);

}  // namespace stosched::prob
