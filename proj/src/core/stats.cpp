#include "stosched/core/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace stosched {

SampleSummary summarize(std::span<const double> values) {
  SampleSummary s;
  s.count = static_cast<long>(values.size());
  if (values.empty()) return s;
  double sum = 0.0;
  s.min = s.max = values.front();
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    s.half_width_95 = 1.959963984540054 * s.stddev / std::sqrt(static_cast<double>(values.size()));
  }
  return s;
}

double quantile(std::span<const double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(q * n));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

ChiSquare chi_square(std::span<const long> observed, std::span<const double> probs, double min_expected) {
  if (observed.size() != probs.size()) throw std::invalid_argument("chi_square: size mismatch");
  const double total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), 0L));
  std::vector<double> obs, expct;
  double o = 0.0, e = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    o += static_cast<double>(observed[i]);
    e += probs[i] * total;
    if (e >= min_expected) {
      obs.push_back(o);
      expct.push_back(e);
      o = e = 0.0;
    }
  }
  if (e > 0.0 || o > 0.0) {
    if (expct.empty()) {
      obs.push_back(o);
      expct.push_back(e);
    } else {
      obs.back() += o;
      expct.back() += e;
    }
  }
  ChiSquare out;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (expct[i] > 0.0) out.statistic += (obs[i] - expct[i]) * (obs[i] - expct[i]) / expct[i];
    else if (obs[i] > 0.0) out.statistic = std::numeric_limits<double>::infinity();
  }
  out.dof = static_cast<int>(obs.size()) - 1;
  return out;
}

double chi_square_critical(int dof, double z) {
  if (dof < 1) return 0.0;
  const double k = dof;
  const double c = 1.0 - 2.0 / (9.0 * k) + z * std::sqrt(2.0 / (9.0 * k));
  return k * c * c * c;
}

}  // namespace stosched
