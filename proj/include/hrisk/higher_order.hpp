#pragma once

#include <optional>
#include <vector>

#include "hrisk/distribution.hpp"
#include "hrisk/spectral.hpp"

namespace hrisk {

/// A monotone norm on discrete laws, one of three families:
///   holder(p)     the usual p-norm E[|Y|^p]^(1/p), p in [1, inf]
///   spectral(m)   the mixture risk applied to |Y|
///   expectile(a)  the a-expectile of |Y|, a in [1/2, 1)
/// Each induces ||Y|| through the law of |Y| alone.
class NormSpec {
 public:
  enum class Kind { holder, spectral, expectile };

  static NormSpec holder(double p);
  static NormSpec spectral(KusuokaMixture m);
  static NormSpec expectile(double alpha);

  Kind kind() const { return kind_; }
  /// Exponent for holder norms; infinity selects the sup norm.
  double holder_p() const;
  const KusuokaMixture& mixture() const;
  double expectile_alpha() const;

 private:
  NormSpec(Kind k, double param, std::optional<KusuokaMixture> m)
      : kind_(k), param_(param), mixture_(std::move(m)) {}

  Kind kind_;
  double param_;
  std::optional<KusuokaMixture> mixture_;
};

/// Outcome of the tail-reweighted minimization: the risk value, the smallest
/// minimizing threshold t_star, the level it was computed at, and, when the
/// norm is spectral, the truncation point in probability space.
struct HigherOrderResult {
  double value;
  double t_star;
  double beta;
  std::optional<double> u_beta;
};

struct CurvePoint {
  double beta;
  double t_star;
  double value;
};

/// Derivative of the risk value in the level, together with a flag raised
/// when the level sits within 1e-9 of a point where the minimizer jumps
/// between atoms (finite differences straddle a kink there).
struct RiskDerivative {
  double value;
  bool near_jump;
};

/// ||Y|| for the given norm, evaluated through the law of |Y|.
double norm_value(const NormSpec& n, const DiscreteDistribution& d);

/// The tail-reweighted risk
///   inf_t  t + (1 - beta)^-1 ||(Y - t)_+||.
/// The objective is convex; for spectral and the two endpoint holder norms
/// it is piecewise linear with kinks only at atom values, so the exact
/// minimizer is found by scanning atoms. Other norms use golden-section
/// search on [essinf - span, esssup] seeded with the atom values. Ties
/// resolve to the smallest minimizer.
HigherOrderResult higher_order_risk(const NormSpec& n, double beta,
                                    const DiscreteDistribution& d);

/// Closed form for spectral norms: the value is the mixture risk of the
/// truncated mixture, and the minimizer is the quantile of d at the
/// truncation point.
HigherOrderResult higher_order_spectral_closed(const KusuokaMixture& m,
                                               double beta,
                                               const DiscreteDistribution& d);

/// The same value written through the survival function: the quantile at
/// the truncation point plus the reweighted integral of the upper density
/// mass along the tail of d. The integrand is a step function between
/// atoms, so the integral is exact.
double survival_representation(const KusuokaMixture& m, double beta,
                               const DiscreteDistribution& d);

/// Variant anchored at the smallest outcome: essinf plus the integral of
/// min(1, sigma_integral(F(y))/(1 - beta)) across the support. Agrees with
/// the other representations on every law.
double survival_representation_bounded(const KusuokaMixture& m, double beta,
                                       const DiscreteDistribution& d);

/// Minimization results for each level in betas (sorted ascending, each in
/// [0, 1)). Per-level work runs in parallel; the output order matches the
/// input order regardless.
std::vector<CurvePoint> minimizer_curve(const NormSpec& n,
                                        const DiscreteDistribution& d,
                                        const std::vector<double>& betas);

/// Single-threaded twin of minimizer_curve, kept as the reference path.
std::vector<CurvePoint> minimizer_curve_serial(const NormSpec& n,
                                               const DiscreteDistribution& d,
                                               const std::vector<double>& betas);

/// d(value)/d(beta) = (value - t_star)/(1 - beta), evaluated with the
/// smallest minimizer. Requires beta in (0, 1).
RiskDerivative risk_derivative(const NormSpec& n, const DiscreteDistribution& d,
                               double beta);

/// (1 - beta) times the risk value; concave as a function of beta.
double weighted_value(const NormSpec& n, const DiscreteDistribution& d,
                      double beta);

}  // namespace hrisk
