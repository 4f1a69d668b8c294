#pragma once

#include <vector>

#include "hrisk/distribution.hpp"

namespace hrisk {

/// Asymmetry parameters for expectile-based functionals. eta is the odds
/// ratio (1 - alpha) / alpha; risk applications require alpha >= 1/2 so that
/// eta <= 1.
struct ExpectileParams {
  double alpha;
  double eta;

  static ExpectileParams from_alpha(double alpha);
};

/// The alpha-expectile of d: the unique x with
///   alpha * E(Y - x)_+ = (1 - alpha) * E(x - Y)_+.
/// Defined for alpha in (0, 1); alpha = 1/2 gives the mean. The defining
/// score is piecewise linear in x, so the root is located by a segment
/// search and finished by exact inversion on that segment.
double expectile(double alpha, const DiscreteDistribution& d);

/// The same value through its mixture representation: the maximum over
/// gamma in [0, 1 - eta] of
///   (1 - gamma) * E Y + gamma * AVaR_{1 - (gamma/(1-gamma)) (eta/(1-eta))}(Y).
/// The objective is piecewise linear in gamma between the images of the
/// cumulative-probability breakpoints, so evaluating those candidates is
/// exact; a golden polish between neighbors guards the bookkeeping.
/// Requires alpha in [1/2, 1).
double expectile_kusuoka(double alpha, const DiscreteDistribution& d);

/// Dual norm of the expectile at level alpha applied to |Z|:
///   sup_{beta in [0,1]} (1 - beta) * AVaR_beta(|Z|) + beta * eta * max|Z|.
/// Piecewise linear in beta, so the supremum sits on a cumulative
/// breakpoint of |Z| or at an endpoint. Requires alpha in [1/2, 1).
double expectile_dual_norm(double alpha, const DiscreteDistribution& z);

/// Candidate gamma values for the higher-order expectile maximization:
/// interval endpoints, the branch boundary, and every cumulative
/// breakpoint of d pulled back through both tail-level maps. Sorted and
/// deduplicated, restricted to [0, 1 - eta].
std::vector<double> expectile_gamma_grid(double alpha, double beta,
                                         const DiscreteDistribution& d);

/// Higher-order expectile: the value of the expectile risk functional at
/// asymmetry alpha composed with tail re-weighting at level beta. Computed
/// as a maximum over gamma of a two-branch combination of tail averages;
/// both branches are piecewise linear between grid candidates, and the
/// branch boundary marks where the re-weighted mixture collapses to a
/// single tail average. beta = 0 recovers expectile_kusuoka and
/// alpha = 1/2 recovers AVaR_beta. Requires alpha in [1/2, 1) and beta in
/// [0, 1).
double higher_order_expectile(double alpha, double beta,
                              const DiscreteDistribution& d);

}  // namespace hrisk
