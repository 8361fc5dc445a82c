#include "stosched/prob/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stosched::prob {

namespace {

void check_q(double q) {
  if (!(q > 0.0 && q <= 1.0)) throw std::domain_error("geometric parameter must lie in (0, 1]");
}

// (1 - q)^e for e >= 0, with 0^0 = 1.
double survive(double q, std::int64_t e) {
  if (e <= 0) return 1.0;
  if (q == 1.0) return 0.0;
  return std::exp(static_cast<double>(e) * std::log1p(-q));
}

}  // namespace

double geom_pmf(double q, std::int64_t g) {
  check_q(q);
  if (g < 1) return 0.0;
  return survive(q, g - 1) * q;
}

double geom_cdf(double q, std::int64_t g) {
  check_q(q);
  if (g < 1) return 0.0;
  if (g == kInfinity || q == 1.0) return 1.0;
  return -std::expm1(static_cast<double>(g) * std::log1p(-q));
}

double geom_tail(double q, std::int64_t g) {
  check_q(q);
  if (g <= 1) return 1.0;
  if (g == kInfinity) return 0.0;
  return survive(q, g - 1);
}

double geom_interval(double q, std::int64_t a, std::int64_t b) {
  check_q(q);
  if (a > b || b < 1) return 0.0;
  if (a <= 1) return b == kInfinity ? 1.0 : 1.0 - survive(q, b);
  if (b == kInfinity) return survive(q, a - 1);
  return survive(q, a - 1) * (1.0 - survive(q, b - a + 1));
}

std::int64_t sample_geometric(double q, RngStream& stream) {
  check_q(q);
  const double u = stream.uniform_pos();
  if (q == 1.0) return 1;
  const double g = std::floor(std::log(u) / std::log1p(-q));
  if (g >= 9.0e18) return kInfinity;
  return 1 + static_cast<std::int64_t>(g);
}

double binom_pmf(std::int64_t n, double p, std::int64_t k) {
  if (n < 0) throw std::domain_error("binomial n must be nonnegative");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binomial p must lie in [0, 1]");
  if (k < 0 || k > n) return 0.0;
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == n ? 1.0 : 0.0;
  const double nn = static_cast<double>(n), kk = static_cast<double>(k);
  const double log_choose = std::lgamma(nn + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(nn - kk + 1.0);
  return std::exp(log_choose + kk * std::log(p) + (nn - kk) * std::log1p(-p));
}

double binom_cdf(std::int64_t n, double p, std::int64_t k) {
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  // Sum the shorter side so the complement does not lose precision.
  const double mode = static_cast<double>(n) * p;
  if (static_cast<double>(k) <= mode) {
    double acc = 0.0;
    for (std::int64_t i = 0; i <= k; ++i) acc += binom_pmf(n, p, i);
    return std::min(acc, 1.0);
  }
  double upper = 0.0;
  for (std::int64_t i = k + 1; i <= n; ++i) upper += binom_pmf(n, p, i);
  return std::max(0.0, 1.0 - upper);
}

}  // namespace stosched::prob
