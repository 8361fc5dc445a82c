#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace stosched::prob {

/// Finite law on the real line, kept canonical: values strictly increasing,
/// atoms closer than kMergeTolerance merged. `exact_integers()` reports
/// whether every value is an integer (convolutions then stay exact).
class DiscreteLaw {
 public:
  struct Atom {
    double value;
    double prob;
  };

  static constexpr double kMergeTolerance = 1e-12;

  /// Throws std::invalid_argument if the mass is not 1 within 1e-12.
  explicit DiscreteLaw(std::vector<Atom> atoms);

  /// pmf[i] is the mass at offset + i.
  static DiscreteLaw from_pmf(std::span<const double> pmf, std::int64_t offset = 0);
  static DiscreteLaw point(double value);
  static DiscreteLaw bernoulli(double p);
  static DiscreteLaw binomial(std::int64_t n, double p);
  /// Law of min(k, G) with G ~ Geom(q); support {1..k} (point 0 for k = 0).
  static DiscreteLaw clipped_geometric(std::int64_t k, double q);

  std::span<const Atom> atoms() const { return atoms_; }
  bool exact_integers() const { return integral_; }

  double mean() const;
  /// P(X >= z).
  double tail(double z) const;
  /// P(X <= z).
  double cdf(double z) const;

  /// Law of c * X.
  DiscreteLaw scaled(double c) const;
  /// Law of X + Y for independent X ~ *this, Y ~ other.
  DiscreteLaw convolve(const DiscreteLaw& other) const;

 private:
  std::vector<Atom> atoms_;
  bool integral_ = true;
};

/// True iff a is stochastically dominated by b: P(a >= z) <= P(b >= z) + 1e-12
/// for every z in the union of both supports.
bool stoch_dominates(const DiscreteLaw& a, const DiscreteLaw& b);

/// Exact law of sum_i weights[i] * B_i with independent B_i ~ Bernoulli(probs[i]).
DiscreteLaw weighted_bernoulli_sum(std::span<const double> weights, std::span<const double> probs);

}  // namespace stosched::prob
