#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace stosched::prob {

/// E[(1 - (G + 1) / (lambda0 * N))_+] for G ~ Geom(1/N), as the exact finite
/// sum over g = 1 .. floor(lambda0 * N) - 1.
double truncated_geom_mean(double lambda0, std::int64_t N);

/// lambda + e^{-lambda} - 1, i.e. E[(lambda - X)_+] for X ~ Exp(1).
double squaring_limit(double lambda);

enum class BoundKind { markov, hoeffding, chernoff_upper, chernoff_lower, chernoff_poisson };

BoundKind parse_bound_kind(std::string_view name);
std::string_view to_string(BoundKind kind);

/// Parameters of the reference bounds. Fields not used by a kind are ignored.
struct BoundParams {
  double expectation = 0.0;  // markov: E[X]; chernoff*: mu
  double zeta = 0.0;         // markov threshold, hoeffding deviation, chernoff_poisson zeta
  double eta = 0.0;          // chernoff_upper / chernoff_lower, in (0, 1)
  std::int64_t count = 0;    // hoeffding: number of summands m
};

/// Numeric value of the chosen tail bound:
///   markov            E[X] / zeta
///   hoeffding         exp(-2 m zeta^2)
///   chernoff_upper    exp(-mu eta^2 / 3)
///   chernoff_lower    exp(-mu eta^2 / 2)
///   chernoff_poisson  exp(-mu zeta^2 / (2 + zeta))
/// Throws std::domain_error outside the parameter domains.
double concentration_reference(BoundKind kind, const BoundParams& params);

/// Constants from the upper-bound analysis of the checkpoint policy.
struct AnalysisConstants {
  int kstar = 0;
  std::vector<double> gamma;  // gamma[k] for k = 0..kstar+1 (gamma[0] unused, NaN)
  std::vector<double> beta;   // beta[k] for k = 0..kstar+1 (beta[0], beta[1] unused, NaN)
  double beta_infinity = 0.0;
  double psi = 0.0;
  double epsilon = 0.0;
};

/// gamma_1 = 1, gamma_{k+1} = gamma_k^2 / 2; beta_k = 3/4 - (2/alpha) sum_{h<=k-2} gamma_h;
/// psi = 1 / (8 k* + 16); epsilon = exp(-(alpha - 32)^2 m^{1/3} / 768).
/// Requires alpha > 32 and m >= 2.
AnalysisConstants analysis_constants(double alpha, double m);

}  // namespace stosched::prob
