#include "stosched/prob/discrete_law.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "stosched/prob/distributions.hpp"

namespace stosched::prob {

namespace {

bool close(double a, double b) {
  return std::abs(a - b) <= DiscreteLaw::kMergeTolerance * std::max(1.0, std::abs(a));
}

}  // namespace

DiscreteLaw::DiscreteLaw(std::vector<Atom> atoms) {
  if (atoms.empty()) throw std::invalid_argument("DiscreteLaw: empty support");
  double total = 0.0;
  for (const auto& a : atoms) {
    if (!std::isfinite(a.value) || !(a.prob >= 0.0))
      throw std::invalid_argument("DiscreteLaw: invalid atom");
    total += a.prob;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("DiscreteLaw: mass sums to " + std::to_string(total));
  std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) { return x.value < y.value; });
  for (const auto& a : atoms) {
    if (!atoms_.empty() && close(atoms_.back().value, a.value))
      atoms_.back().prob += a.prob;
    else
      atoms_.push_back(a);
  }
  integral_ = std::all_of(atoms_.begin(), atoms_.end(),
                          [](const Atom& a) { return a.value == std::round(a.value); });
}

DiscreteLaw DiscreteLaw::from_pmf(std::span<const double> pmf, std::int64_t offset) {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < pmf.size(); ++i)
    if (pmf[i] > 0.0) atoms.push_back({static_cast<double>(offset + static_cast<std::int64_t>(i)), pmf[i]});
  if (atoms.empty()) atoms.push_back({static_cast<double>(offset), 0.0});
  return DiscreteLaw(std::move(atoms));
}

DiscreteLaw DiscreteLaw::point(double value) { return DiscreteLaw({{value, 1.0}}); }

DiscreteLaw DiscreteLaw::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("bernoulli p must lie in [0, 1]");
  return DiscreteLaw({{0.0, 1.0 - p}, {1.0, p}});
}

DiscreteLaw DiscreteLaw::binomial(std::int64_t n, double p) {
  std::vector<double> pmf(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k) pmf[static_cast<std::size_t>(k)] = binom_pmf(n, p, k);
  // Log-space pmfs can drift from unit mass by a few ulps per term.
  double total = 0.0;
  for (double v : pmf) total += v;
  for (double& v : pmf) v /= total;
  return from_pmf(pmf);
}

DiscreteLaw DiscreteLaw::clipped_geometric(std::int64_t k, double q) {
  if (k < 0) throw std::domain_error("clip level must be nonnegative");
  if (k == 0) return point(0.0);
  std::vector<Atom> atoms;
  for (std::int64_t v = 1; v < k; ++v) atoms.push_back({static_cast<double>(v), geom_pmf(q, v)});
  atoms.push_back({static_cast<double>(k), geom_tail(q, k)});
  return DiscreteLaw(std::move(atoms));
}

double DiscreteLaw::mean() const {
  double acc = 0.0;
  for (const auto& a : atoms_) acc += a.value * a.prob;
  return acc;
}

double DiscreteLaw::tail(double z) const {
  double acc = 0.0;
  for (auto it = atoms_.rbegin(); it != atoms_.rend() && (it->value >= z || close(it->value, z)); ++it)
    acc += it->prob;
  return acc;
}

double DiscreteLaw::cdf(double z) const {
  double acc = 0.0;
  for (const auto& a : atoms_) {
    if (a.value > z && !close(a.value, z)) break;
    acc += a.prob;
  }
  return acc;
}

DiscreteLaw DiscreteLaw::scaled(double c) const {
  std::vector<Atom> atoms(atoms_);
  for (auto& a : atoms) a.value *= c;
  return DiscreteLaw(std::move(atoms));
}

DiscreteLaw DiscreteLaw::convolve(const DiscreteLaw& other) const {
  std::map<double, double> acc;
  for (const auto& a : atoms_)
    for (const auto& b : other.atoms_) acc[a.value + b.value] += a.prob * b.prob;
  std::vector<Atom> atoms;
  atoms.reserve(acc.size());
  for (const auto& [v, p] : acc) atoms.push_back({v, p});
  return DiscreteLaw(std::move(atoms));
}

bool stoch_dominates(const DiscreteLaw& a, const DiscreteLaw& b) {
  for (const auto* law : {&a, &b})
    for (const auto& atom : law->atoms())
      if (a.tail(atom.value) > b.tail(atom.value) + 1e-12) return false;
  return true;
}

DiscreteLaw weighted_bernoulli_sum(std::span<const double> weights, std::span<const double> probs) {
  if (weights.size() != probs.size())
    throw std::invalid_argument("weighted_bernoulli_sum: length mismatch");
  DiscreteLaw law = DiscreteLaw::point(0.0);
  for (std::size_t i = 0; i < weights.size(); ++i)
    law = law.convolve(DiscreteLaw::bernoulli(probs[i]).scaled(weights[i]));
  return law;
}

}  // namespace stosched::prob
