#pragma once

#include <cstddef>
#include <vector>

#include "hrisk/distribution.hpp"

namespace hrisk {

/// Finite mixture of tail levels: atoms (alpha_i, w_i) with alpha_i in [0,1)
/// strictly increasing and weights w_i > 0 summing to 1. Encodes both a
/// mixing measure over AVaR levels and, through
///
///   sigma(u) = sum_i w_i 1{u >= alpha_i} / (1 - alpha_i),
///
/// the induced spectral density on [0,1).
class KusuokaMixture {
 public:
  struct Atom {
    double alpha;
    double weight;
  };

  /// Sorts by level, merges exactly equal levels, renormalizes the weights.
  /// The raw weight sum must be within `sum_tolerance` of 1.
  static KusuokaMixture from_atoms(std::vector<Atom> pairs,
                                   double sum_tolerance = 1e-12);

  /// Accepts arbitrary positive weights and renormalizes them.
  static KusuokaMixture from_weights(std::vector<Atom> pairs);

  /// Single AVaR at the given level.
  static KusuokaMixture avar_at(double alpha);

  std::size_t size() const { return alphas_.size(); }
  double alpha(std::size_t i) const { return alphas_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  const std::vector<double>& alphas() const { return alphas_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  KusuokaMixture() = default;
  static KusuokaMixture build(std::vector<Atom> pairs, bool weights,
                              double sum_tolerance);

  std::vector<double> alphas_;
  std::vector<double> weights_;
};

/// Bundle describing when truncation collapses to a single tail level:
/// for beta >= threshold_beta the truncated mixture is the one-atom mixture
/// at level 1 - (1 - alpha_tilde)(1 - beta).
struct CollapseInfo {
  double threshold_beta;
  double alpha_tilde;
};

struct TruncationResult {
  KusuokaMixture mixture;
  double u_beta;
  double p0;
};

/// Induced spectral density sigma(u) = sum_i w_i 1{u >= alpha_i}/(1-alpha_i).
double sigma_eval(const KusuokaMixture& m, double u);

/// Upper integral of the density, sum_i w_i (1 - max(u, alpha_i))/(1-alpha_i)
/// for u in [0,1]. Decreases from 1 at u = 0 to 0 at u = 1.
double sigma_integral(const KusuokaMixture& m, double u);

/// Mass the density places on [0, u] weighted by how far u reaches past each
/// level: sum_i w_i max(0, u - alpha_i)/(1-alpha_i). This is the map u_beta
/// inverts; tail_level(m, u_beta(m, b)) == b for b > 0.
double tail_level(const KusuokaMixture& m, double u);

/// Average value-at-risk, the exact fractional tail average
///   AVaR_alpha(Y) = 1/(1-alpha) * integral_alpha^1 quantile(Y, u) du.
/// avar(0, d) is the mean, avar(1, d) the largest atom.
double avar(double alpha, const DiscreteDistribution& d);

/// sum_i w_i AVaR_{alpha_i}(Y); equals the integral of sigma against the
/// quantile function since sigma is a step function.
double spectral_risk(const KusuokaMixture& m, const DiscreteDistribution& d);

/// Smallest u in [0,1) solving
///   beta = sum_i w_i max(0, u - alpha_i)/(1 - alpha_i),
/// found by exact inversion of the piecewise-linear left side over the
/// breakpoints alpha_i. Strictly increasing in beta for beta > 0.
double u_beta(const KusuokaMixture& m, double beta);

/// Tail reweighting of the mixture at composition level beta:
/// a point mass p0 at u_beta plus the original atoms above u_beta scaled by
/// 1/(1-beta). The result is again a probability mixture; its induced
/// density vanishes below u_beta and equals sigma(u)/(1-beta) above it.
TruncationResult truncate_mixture(const KusuokaMixture& m, double beta);

/// Collapse threshold and the weighted tail level alpha_tilde:
///   threshold_beta = 1 - (1 - max alpha_i) * sum_i w_i/(1-alpha_i)
///   alpha_tilde    = (sum_i alpha_i w_i/(1-alpha_i)) / (sum_i w_i/(1-alpha_i))
CollapseInfo collapse_info(const KusuokaMixture& m);

/// Product density sigma(u) * w(u), where w steps up by v_j/(1-beta_j) at
/// u_{beta_j} for each atom (beta_j, v_j) of mu, re-expressed as a mixture.
/// The product must integrate to 1 within 1e-10; anything else signals an
/// invalid pairing and throws.
KusuokaMixture weaken_order(const KusuokaMixture& sigma,
                            const KusuokaMixture& mu);

}  // namespace hrisk
