#pragma once

// Shared helpers for the test binaries: canned distributions, seeded random
// instance generators, and small numeric utilities. Every randomized suite
// prints the seed it ran with so a failure can be replayed.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hrisk/distribution.hpp"
#include "hrisk/spectral.hpp"

namespace testsupport {

inline constexpr std::uint64_t kSeed = 20240817u;

using Rng = std::mt19937_64;

inline hrisk::DiscreteDistribution uniform4() {
  return hrisk::DiscreteDistribution::from_atoms(
      {{1.0, 0.25}, {2.0, 0.25}, {3.0, 0.25}, {4.0, 0.25}});
}

inline hrisk::DiscreteDistribution uniform_on(std::vector<double> values) {
  std::vector<hrisk::DiscreteDistribution::Atom> pairs;
  const double p = 1.0 / static_cast<double>(values.size());
  for (double v : values) pairs.push_back({v, p});
  return hrisk::DiscreteDistribution::from_weights(pairs);
}

inline hrisk::DiscreteDistribution constant(double c) {
  return hrisk::DiscreteDistribution::from_atoms({{c, 1.0}});
}

/// Random law with up to max_atoms atoms, values in [lo, hi], probabilities
/// drawn from a flat simplex.
inline hrisk::DiscreteDistribution random_distribution(Rng& rng,
                                                       int max_atoms = 12,
                                                       double lo = -10.0,
                                                       double hi = 10.0) {
  std::uniform_int_distribution<int> natoms(1, max_atoms);
  std::uniform_real_distribution<double> val(lo, hi);
  std::exponential_distribution<double> expo(1.0);
  const int n = natoms(rng);
  std::vector<hrisk::DiscreteDistribution::Atom> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pairs.push_back({val(rng), expo(rng) + 1e-3});
  }
  return hrisk::DiscreteDistribution::from_weights(pairs);
}

/// Random tail-level mixture with up to max_atoms atoms, levels in
/// [0, alpha_max].
inline hrisk::KusuokaMixture random_mixture(Rng& rng, int max_atoms = 4,
                                            double alpha_max = 0.95) {
  std::uniform_int_distribution<int> natoms(1, max_atoms);
  std::uniform_real_distribution<double> level(0.0, alpha_max);
  std::exponential_distribution<double> expo(1.0);
  const int n = natoms(rng);
  std::vector<hrisk::KusuokaMixture::Atom> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pairs.push_back({level(rng), expo(rng) + 1e-2});
  }
  return hrisk::KusuokaMixture::from_weights(pairs);
}

inline std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.push_back(lo + (hi - lo) * static_cast<double>(i) /
                           static_cast<double>(n - 1));
  }
  return out;
}

}  // namespace testsupport
