#include "stosched/prob/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "stosched/prob/distributions.hpp"

namespace stosched::prob {

double truncated_geom_mean(double lambda0, std::int64_t N) {
  if (!(lambda0 > 0.0 && lambda0 < 1.0)) throw std::domain_error("lambda0 must lie in (0, 1)");
  if (N < 2) throw std::domain_error("N must be at least 2");
  const double scale = lambda0 * static_cast<double>(N);
  const auto upper = static_cast<std::int64_t>(std::floor(scale)) - 1;
  const double q = 1.0 / static_cast<double>(N);
  double acc = 0.0;
  for (std::int64_t g = 1; g <= upper; ++g)
    acc += (1.0 - static_cast<double>(g + 1) / scale) * geom_pmf(q, g);
  return acc;
}

double squaring_limit(double lambda) { return lambda + std::expm1(-lambda); }

BoundKind parse_bound_kind(std::string_view name) {
  if (name == "markov") return BoundKind::markov;
  if (name == "hoeffding") return BoundKind::hoeffding;
  if (name == "chernoff_upper") return BoundKind::chernoff_upper;
  if (name == "chernoff_lower") return BoundKind::chernoff_lower;
  if (name == "chernoff_poisson") return BoundKind::chernoff_poisson;
  throw std::invalid_argument("unknown bound kind '" + std::string(name) + "'");
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::markov: return "markov";
    case BoundKind::hoeffding: return "hoeffding";
    case BoundKind::chernoff_upper: return "chernoff_upper";
    case BoundKind::chernoff_lower: return "chernoff_lower";
    case BoundKind::chernoff_poisson: return "chernoff_poisson";
  }
  return "unknown";
}

double concentration_reference(BoundKind kind, const BoundParams& p) {
  switch (kind) {
    case BoundKind::markov:
      if (!(p.zeta > 0.0) || p.expectation < 0.0)
        throw std::domain_error("markov: need zeta > 0 and E[X] >= 0");
      return p.expectation / p.zeta;
    case BoundKind::hoeffding:
      if (!(p.zeta > 0.0) || p.count < 1) throw std::domain_error("hoeffding: need zeta > 0 and m >= 1");
      return std::exp(-2.0 * static_cast<double>(p.count) * p.zeta * p.zeta);
    case BoundKind::chernoff_upper:
    case BoundKind::chernoff_lower: {
      if (!(p.eta > 0.0 && p.eta < 1.0) || p.expectation < 0.0)
        throw std::domain_error("chernoff: need eta in (0, 1) and mu >= 0");
      const double denom = kind == BoundKind::chernoff_upper ? 3.0 : 2.0;
      return std::exp(-p.expectation * p.eta * p.eta / denom);
    }
    case BoundKind::chernoff_poisson:
      if (!(p.zeta > 0.0) || p.expectation < 0.0)
        throw std::domain_error("chernoff_poisson: need zeta > 0 and mu >= 0");
      return std::exp(-p.expectation * p.zeta * p.zeta / (2.0 + p.zeta));
  }
  throw std::domain_error("unknown bound kind");
}

AnalysisConstants analysis_constants(double alpha, double m) {
  if (!(alpha > 32.0)) throw std::domain_error("analysis constants need alpha > 32");
  if (!(m >= 2.0)) throw std::domain_error("analysis constants need m >= 2");
  const double nan = std::numeric_limits<double>::quiet_NaN();

  // k* as the first index with gamma_k < m^{-2/3}, compared in log2 space:
  // log2 gamma_k = -(2^{k-1} - 1).
  const double threshold = -(2.0 / 3.0) * std::log2(m);
  AnalysisConstants c;
  int k = 1;
  while (-(std::ldexp(1.0, k - 1) - 1.0) >= threshold) ++k;
  c.kstar = k;

  const int last = c.kstar + 1;
  c.gamma.assign(static_cast<std::size_t>(last + 1), nan);
  c.beta.assign(static_cast<std::size_t>(last + 1), nan);
  c.gamma[1] = 1.0;
  for (int h = 2; h <= last; ++h) c.gamma[h] = 0.5 * c.gamma[h - 1] * c.gamma[h - 1];
  double partial = 0.0;  // sum_{h=1}^{k-2} gamma_h
  for (int h = 2; h <= last; ++h) {
    if (h >= 3) partial += c.gamma[h - 2];
    c.beta[h] = 0.75 - (2.0 / alpha) * partial;
  }

  double total = 0.0;
  for (double g = 1.0; g > 0.0; g = 0.5 * g * g) total += g;
  c.beta_infinity = 0.75 - (2.0 / alpha) * total;
  c.psi = 1.0 / (8.0 * c.kstar + 16.0);
  c.epsilon = std::exp(-(alpha - 32.0) * (alpha - 32.0) * std::cbrt(m) / 768.0);
  return c;
}

}  // namespace stosched::prob
