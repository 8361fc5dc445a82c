#include "stosched/core/dist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace stosched {

Dist::Dist(std::vector<Atom> atoms) {
  if (atoms.empty()) throw std::invalid_argument("Dist: empty support");
  double total = 0.0;
  for (const auto& a : atoms) {
    if (!std::isfinite(a.value) || a.value < 0.0)
      throw std::invalid_argument("Dist: values must be finite and nonnegative");
    if (!(a.prob >= 0.0 && a.prob <= 1.0))
      throw std::invalid_argument("Dist: probabilities must lie in [0,1]");
    total += a.prob;
  }
  if (std::abs(total - 1.0) > kProbTolerance)
    throw std::invalid_argument("Dist: probabilities sum to " + std::to_string(total));

  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& x, const Atom& y) { return x.value < y.value; });
  for (const auto& a : atoms) {
    if (a.prob == 0.0) continue;
    if (!atoms_.empty() && atoms_.back().value == a.value)
      atoms_.back().prob += a.prob;
    else
      atoms_.push_back(a);
  }
  if (atoms_.empty()) throw std::invalid_argument("Dist: no atom with positive mass");

  double acc = 0.0;
  cumulative_.reserve(atoms_.size());
  for (const auto& a : atoms_) {
    acc += a.prob;
    mean_ += a.value * a.prob;
    cumulative_.push_back(acc);
  }
}

Dist Dist::point(double value) { return Dist({{value, 1.0}}); }

Dist Dist::bernoulli(double p) { return Dist({{0.0, 1.0 - p}, {1.0, p}}); }

bool Dist::in_support(double value) const {
  return std::any_of(atoms_.begin(), atoms_.end(),
                     [value](const Atom& a) { return a.value == value; });
}

double Dist::quantile(double u) const {
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) return atoms_.back().value;
  return atoms_[static_cast<std::size_t>(it - cumulative_.begin())].value;
}

}  // namespace stosched
