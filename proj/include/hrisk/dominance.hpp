#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hrisk/distribution.hpp"
#include "hrisk/higher_order.hpp"
#include "hrisk/spectral.hpp"

namespace hrisk {

enum class Outcome { yes, no, undetermined };

/// Decision record for a dominance check. margin is the smallest slack of
/// the defining inequality over all checked points; witness is a point
/// where the inequality fails or sits within tolerance (absent when the
/// outcome is yes). sufficient distinguishes a certifying check from
/// necessary evidence gathered at caller-chosen levels.
struct DominanceVerdict {
  Outcome outcome;
  std::optional<double> witness;
  double margin;
  bool sufficient;
};

/// Risk levels at which comparing the two risk profiles decides the
/// dominance relation: crossings of the two minimizer curves together with
/// the clamped interval endpoints, strictly increasing.
struct CriticalLevels {
  std::vector<double> betas;
};

/// Distribution-function comparison F_X(x) >= F_Y(x) for all x, decided
/// exactly at the union of atom values.
DominanceVerdict first_order(const DiscreteDistribution& x,
                             const DiscreteDistribution& y);

/// Order-p comparison E(t-X)_+^{p-1} >= E(t-Y)_+^{p-1} for all t. p = 1
/// delegates to the distribution-function check; p = 2 is exact at atom
/// breakpoints; other orders add per-interval interior minimization and may
/// return undetermined when the margin is within 1e-9.
DominanceVerdict p_order(const DiscreteDistribution& x,
                         const DiscreteDistribution& y, double p);

/// The pair of k-fold repeated-integral values at t for both laws, computed
/// as partial moments divided by (k-1)!.
std::pair<double, double> integer_order_integrals(const DiscreteDistribution& x,
                                                  const DiscreteDistribution& y,
                                                  int k, double t);

/// Mixture-norm comparison ||(t-X)_+|| >= ||(t-Y)_+|| for all t. The map is
/// piecewise linear in t with kinks only at atoms, so the union of atoms
/// plus one probe beyond each end decides the relation exactly.
DominanceVerdict spectral_order(const DiscreteDistribution& x,
                                const DiscreteDistribution& y,
                                const KusuokaMixture& m);

/// Profile comparison R_beta(-X) >= R_beta(-Y) at the supplied levels.
/// A yes outcome is only evidence unless the levels certify the relation
/// (certified_levels marks levels obtained from critical_levels); the
/// verdict's sufficient field records which semantics applies.
DominanceVerdict risk_profile_order(const DiscreteDistribution& x,
                                    const DiscreteDistribution& y,
                                    const NormSpec& n,
                                    const std::vector<double>& betas,
                                    bool certified_levels = false);

/// Levels at which the minimizer curves of -X and -Y cross, bracketed by
/// the clamped endpoints 1e-9 and 1 - 1e-6. For mixture norms (and the
/// p = 1 norm) the curves are step functions of the level with breakpoints
/// at mapped cumulative probabilities, so crossings are located exactly;
/// otherwise a grid of the given resolution is scanned and each sign change
/// is refined by bisection to 1e-9. Stretches where the curves coincide
/// contribute their endpoints.
CriticalLevels critical_levels(const DiscreteDistribution& x,
                               const DiscreteDistribution& y,
                               const NormSpec& n, double resolution);

/// Certifying dominance check: evaluates the risk profiles at the critical
/// levels plus the midpoints between them. A yes outcome decides X
/// dominated by Y; no carries a witness level; undetermined reports a
/// profile difference inside tolerance 1e-9.
DominanceVerdict verify_dominance(const DiscreteDistribution& x,
                                  const DiscreteDistribution& y,
                                  const NormSpec& n);

/// Both order-p verdicts for p < p_prime, for checking that dominance at
/// the lower order implies dominance at the higher one.
std::pair<DominanceVerdict, DominanceVerdict> order_implication_check(
    const DiscreteDistribution& x, const DiscreteDistribution& y, double p,
    double p_prime);

}  // namespace hrisk
