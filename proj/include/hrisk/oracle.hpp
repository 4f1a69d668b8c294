#pragma once

#include "hrisk/distribution.hpp"
#include "hrisk/dominance.hpp"
#include "hrisk/higher_order.hpp"
#include "hrisk/spectral.hpp"

namespace hrisk {

/// Evaluation grid: points equally spaced values from lo to hi inclusive.
struct GridSpec {
  double lo;
  double hi;
  int points;
};

/// Reference minimization of t + ||excess above t|| / (1 - beta) by grid
/// scan plus one golden-section refinement around the best grid point. The
/// grid must cover the bracket from essinf minus one support span up to
/// esssup; anything narrower throws.
double grid_min_higher_order(const NormSpec& n, double beta,
                             const DiscreteDistribution& d, const GridSpec& g);

/// Reference tail value by direct maximization of E[YZ] over densities
/// 0 <= Z <= 1/(1 - beta) with unit mean: greedy fill from the largest
/// atoms down with a fractional boundary atom.
double dual_avar_sup(double beta, const DiscreteDistribution& d);

/// Reference expectile as the argmin of the asymmetric quadratic error
/// alpha E(Y-t)_+^2 + (1-alpha) E(t-Y)_+^2, located by grid scan plus
/// golden-section refinement. The grid must cover the support.
double loss_argmin_expectile(double alpha, const DiscreteDistribution& d,
                             const GridSpec& g);

/// Reference dominance check: compares ||(t-X)_+|| against ||(t-Y)_+|| at
/// every grid point. The grid must cover the union support expanded by one
/// span on each side. A yes outcome means no violation on the grid, so the
/// verdict is reported as evidence rather than a certificate.
DominanceVerdict dense_dominance_sweep(const DiscreteDistribution& x,
                                       const DiscreteDistribution& y,
                                       const NormSpec& n, const GridSpec& g);

/// Sequential twin of dense_dominance_sweep with identical results.
DominanceVerdict dense_dominance_sweep_serial(const DiscreteDistribution& x,
                                              const DiscreteDistribution& y,
                                              const NormSpec& n,
                                              const GridSpec& g);

}  // namespace hrisk
