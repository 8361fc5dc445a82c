#pragma once

#include <span>
#include <vector>

namespace stosched {

/// Sample summary with a normal-approximation 95% confidence half-width.
struct SampleSummary {
  double mean = 0.0;
  double half_width_95 = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
  long count = 0;
};

/// Summarizes values in index order (sequential accumulation, so the result
/// is bit-identical for a given input sequence).
SampleSummary summarize(std::span<const double> values);

/// Nearest-rank quantile of the values, q in [0, 1].
double quantile(std::span<const double> values, double q);

/// Pearson goodness-of-fit of observed counts against expected probabilities.
/// Adjacent cells are pooled from the left until each has expected count at
/// least `min_expected`.
struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
};
ChiSquare chi_square(std::span<const long> observed, std::span<const double> probs,
                     double min_expected = 5.0);

/// Upper quantile of the chi-square law with `dof` degrees of freedom at
/// standard-normal level z (Wilson-Hilferty approximation).
double chi_square_critical(int dof, double z);

}  // namespace stosched
