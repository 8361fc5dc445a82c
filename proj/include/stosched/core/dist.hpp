#pragma once

#include <span>
#include <vector>

namespace stosched {

/// Absolute tolerance for probability normalization and tail comparisons.
inline constexpr double kProbTolerance = 1e-12;
/// Absolute tolerance for comparing event times on the real line.
inline constexpr double kTimeTolerance = 1e-9;

/// Finite discrete processing-time distribution.
///
/// Always held in canonical form: atoms sorted by strictly increasing value,
/// duplicates merged, zero-probability atoms dropped. Construction throws
/// std::invalid_argument for negative values, probabilities outside [0,1] or a
/// total mass further than kProbTolerance from 1.
class Dist {
 public:
  struct Atom {
    double value;
    double prob;
  };

  explicit Dist(std::vector<Atom> atoms);

  static Dist point(double value);
  /// Two-point law on {0, 1} with P(1) = p.
  static Dist bernoulli(double p);

  std::span<const Atom> atoms() const { return atoms_; }
  double expected_value() const { return mean_; }
  double max_value() const { return atoms_.back().value; }
  bool deterministic() const { return atoms_.size() == 1; }
  bool in_support(double value) const;

  /// Inverse-CDF lookup for u in [0, 1).
  double quantile(double u) const;

 private:
  std::vector<Atom> atoms_;
  std::vector<double> cumulative_;
  double mean_ = 0.0;
};

inline double expected_value(const Dist& d) { return d.expected_value(); }

}  // namespace stosched
