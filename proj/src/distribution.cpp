#include "hrisk/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hrisk {

DiscreteDistribution DiscreteDistribution::build(std::vector<Atom> pairs,
                                                 bool weights,
                                                 double sum_tolerance) {
  if (pairs.empty()) {
    throw std::invalid_argument("distribution needs at least one atom");
  }
  for (const auto& a : pairs) {
    if (!std::isfinite(a.value)) {
      throw std::invalid_argument("atom value must be finite");
    }
    if (!(a.prob > 0.0) || !std::isfinite(a.prob)) {
      throw std::invalid_argument("atom probability must be positive");
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });

  std::vector<Atom> merged;
  merged.reserve(pairs.size());
  for (const auto& a : pairs) {
    if (!merged.empty() && merged.back().value == a.value) {
      merged.back().prob += a.prob;
    } else {
      merged.push_back(a);
    }
  }

  double total = 0.0;
  for (const auto& a : merged) total += a.prob;
  if (!weights && std::abs(total - 1.0) > sum_tolerance) {
    throw std::invalid_argument("probabilities do not sum to 1");
  }

  DiscreteDistribution d;
  d.values_.reserve(merged.size());
  d.probs_.reserve(merged.size());
  d.cum_.reserve(merged.size());
  double running = 0.0;
  for (const auto& a : merged) {
    d.values_.push_back(a.value);
    d.probs_.push_back(a.prob / total);
    running += a.prob / total;
    d.cum_.push_back(running);
  }
  // pin the last cumulative to 1 so quantile(d, 1) and survival beyond the
  // support are exact
  d.cum_.back() = 1.0;
  return d;
}

DiscreteDistribution DiscreteDistribution::from_atoms(std::vector<Atom> pairs,
                                                      double sum_tolerance) {
  return build(std::move(pairs), false, sum_tolerance);
}

DiscreteDistribution DiscreteDistribution::from_weights(
    std::vector<Atom> pairs) {
  return build(std::move(pairs), true, 0.0);
}

double quantile(const DiscreteDistribution& d, double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::invalid_argument("quantile level must lie in [0, 1]");
  }
  if (u == 0.0) return d.value(0);
  const std::size_t n = d.size();
  std::size_t lo = 0, hi = n - 1;
  // smallest index with cum >= u; cum(n-1) == 1 guarantees existence
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (d.cum(mid) >= u) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return d.value(lo);
}

double cdf(const DiscreteDistribution& d, double x) {
  const auto& vals = d.values();
  const auto it = std::upper_bound(vals.begin(), vals.end(), x);
  if (it == vals.begin()) return 0.0;
  return d.cum(static_cast<std::size_t>(it - vals.begin()) - 1);
}

double survival(const DiscreteDistribution& d, double x) {
  return 1.0 - cdf(d, x);
}

double partial_moment(const DiscreteDistribution& d, double t, double r,
                      Tail side) {
  if (r < 0.0) {
    throw std::invalid_argument("partial moment order must be nonnegative");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double diff =
        side == Tail::lower ? t - d.value(i) : d.value(i) - t;
    if (diff > 0.0) {
      acc += d.prob(i) * (r == 0.0 ? 1.0 : std::pow(diff, r));
    }
  }
  return acc;
}

Summary summary(const DiscreteDistribution& d) {
  double mean = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) mean += d.prob(i) * d.value(i);
  return {mean, d.value(0), d.value(d.size() - 1)};
}

DiscreteDistribution negate(const DiscreteDistribution& d) {
  std::vector<DiscreteDistribution::Atom> pairs;
  pairs.reserve(d.size());
  for (std::size_t i = d.size(); i-- > 0;) {
    pairs.push_back({-d.value(i), d.prob(i)});
  }
  return DiscreteDistribution::from_atoms(std::move(pairs));
}

double lp_norm(const DiscreteDistribution& d, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : d.values()) m = std::max(m, std::abs(v));
    return m;
  }
  if (p < 1.0) {
    throw std::invalid_argument("norm order must be at least 1");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    acc += d.prob(i) * std::pow(std::abs(d.value(i)), p);
  }
  return std::pow(acc, 1.0 / p);
}

DiscreteDistribution translate(const DiscreteDistribution& d, double c) {
  std::vector<DiscreteDistribution::Atom> pairs;
  pairs.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    pairs.push_back({d.value(i) + c, d.prob(i)});
  }
  return DiscreteDistribution::from_atoms(std::move(pairs));
}

DiscreteDistribution scale(const DiscreteDistribution& d, double c) {
  if (!(c > 0.0)) {
    throw std::invalid_argument("scale factor must be positive");
  }
  std::vector<DiscreteDistribution::Atom> pairs;
  pairs.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    pairs.push_back({c * d.value(i), d.prob(i)});
  }
  return DiscreteDistribution::from_atoms(std::move(pairs));
}

DiscreteDistribution abs_law(const DiscreteDistribution& d) {
  std::vector<DiscreteDistribution::Atom> pairs;
  pairs.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    pairs.push_back({std::abs(d.value(i)), d.prob(i)});
  }
  return DiscreteDistribution::from_atoms(std::move(pairs));
}

DiscreteDistribution excess_law(const DiscreteDistribution& d, double t) {
  std::vector<DiscreteDistribution::Atom> pairs;
  pairs.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    pairs.push_back({std::max(0.0, d.value(i) - t), d.prob(i)});
  }
  return DiscreteDistribution::from_atoms(std::move(pairs));
}

DiscreteDistribution shortfall_law(const DiscreteDistribution& d, double t) {
  std::vector<DiscreteDistribution::Atom> pairs;
  pairs.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    pairs.push_back({std::max(0.0, t - d.value(i)), d.prob(i)});
  }
  return DiscreteDistribution::from_atoms(std::move(pairs));
}

}  // namespace hrisk
