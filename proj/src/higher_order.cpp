#include "hrisk/higher_order.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "hrisk/expectile.hpp"
#include "hrisk/scalar_opt.hpp"

namespace hrisk {

NormSpec NormSpec::holder(double p) {
  if (!(p >= 1.0)) {
    throw std::invalid_argument("norm exponent must be at least 1");
  }
  return NormSpec(Kind::holder, p, std::nullopt);
}

NormSpec NormSpec::spectral(KusuokaMixture m) {
  return NormSpec(Kind::spectral, 0.0, std::move(m));
}

NormSpec NormSpec::expectile(double alpha) {
  if (!(alpha >= 0.5 && alpha < 1.0)) {
    throw std::invalid_argument("asymmetry level must lie in [1/2, 1)");
  }
  return NormSpec(Kind::expectile, alpha, std::nullopt);
}

double NormSpec::holder_p() const {
  if (kind_ != Kind::holder) throw std::logic_error("not an exponent norm");
  return param_;
}

const KusuokaMixture& NormSpec::mixture() const {
  if (kind_ != Kind::spectral) throw std::logic_error("not a spectral norm");
  return *mixture_;
}

double NormSpec::expectile_alpha() const {
  if (kind_ != Kind::expectile) throw std::logic_error("not an expectile norm");
  return param_;
}

double norm_value(const NormSpec& n, const DiscreteDistribution& d) {
  switch (n.kind()) {
    case NormSpec::Kind::holder:
      return lp_norm(d, n.holder_p());
    case NormSpec::Kind::spectral:
      return spectral_risk(n.mixture(), abs_law(d));
    case NormSpec::Kind::expectile:
      return expectile(n.expectile_alpha(), abs_law(d));
  }
  throw std::logic_error("unhandled norm kind");
}

namespace {

void require_level(double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("risk level must lie in [0, 1)");
  }
}

// The objective is piecewise linear in t exactly when the norm of the
// excess is: spectral norms and the two endpoint exponents. Its kinks sit
// on atom values, so scanning them is exact.
bool piecewise_linear_objective(const NormSpec& n) {
  switch (n.kind()) {
    case NormSpec::Kind::spectral:
      return true;
    case NormSpec::Kind::holder: {
      const double p = n.holder_p();
      return p == 1.0 || std::isinf(p);
    }
    case NormSpec::Kind::expectile:
      return false;
  }
  return false;
}

}  // namespace

HigherOrderResult higher_order_risk(const NormSpec& n, double beta,
                                    const DiscreteDistribution& d) {
  require_level(beta);
  std::optional<double> ub;
  if (n.kind() == NormSpec::Kind::spectral) ub = u_beta(n.mixture(), beta);
  if (d.size() == 1) {
    return {d.value(0), d.value(0), beta, ub};
  }

  auto g = [&](double t) {
    return t + norm_value(n, excess_law(d, t)) / (1.0 - beta);
  };

  double best_t = d.value(0);
  double best_v = g(best_t);
  // Strict improvement required, so flat stretches keep the leftmost point.
  auto consider = [&](double t, double v) {
    const double tol = 1e-12 * (1.0 + std::fabs(best_v));
    if (v < best_v - tol) {
      best_v = v;
      best_t = t;
    } else if (v <= best_v + tol && t < best_t) {
      best_v = std::min(best_v, v);
      best_t = t;
    }
  };

  if (piecewise_linear_objective(n)) {
    for (std::size_t i = 1; i < d.size(); ++i) {
      consider(d.value(i), g(d.value(i)));
    }
  } else {
    const Summary s = summary(d);
    const double span = s.esssup - s.essinf;
    const double t0 = golden_min(g, s.essinf - span, s.esssup, 1e-11 * span);
    consider(t0, g(t0));
    for (std::size_t i = 1; i < d.size(); ++i) {
      consider(d.value(i), g(d.value(i)));
    }
  }
  return {best_v, best_t, beta, ub};
}

HigherOrderResult higher_order_spectral_closed(const KusuokaMixture& m,
                                               double beta,
                                               const DiscreteDistribution& d) {
  require_level(beta);
  const TruncationResult tr = truncate_mixture(m, beta);
  return {spectral_risk(tr.mixture, d), quantile(d, tr.u_beta), beta,
          tr.u_beta};
}

double survival_representation(const KusuokaMixture& m, double beta,
                               const DiscreteDistribution& d) {
  require_level(beta);
  const double u = u_beta(m, beta);
  const double t = quantile(d, u);
  // Between consecutive atoms the distribution function is constant, so the
  // integrand is a step function and each segment contributes its exact
  // area.
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    const double lo = std::max(t, d.value(i));
    const double hi = d.value(i + 1);
    if (hi > lo) acc += (hi - lo) * sigma_integral(m, d.cum(i));
  }
  return t + acc / (1.0 - beta);
}

double survival_representation_bounded(const KusuokaMixture& m, double beta,
                                       const DiscreteDistribution& d) {
  require_level(beta);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    const double seg = d.value(i + 1) - d.value(i);
    const double cap =
        std::min(1.0, sigma_integral(m, d.cum(i)) / (1.0 - beta));
    acc += seg * cap;
  }
  return d.value(0) + acc;
}

namespace {

void require_sorted_levels(const std::vector<double>& betas) {
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] >= 0.0 && betas[i] < 1.0)) {
      throw std::invalid_argument("risk levels must lie in [0, 1)");
    }
    if (i > 0 && betas[i] < betas[i - 1]) {
      throw std::invalid_argument("risk levels must be sorted ascending");
    }
  }
}

}  // namespace

std::vector<CurvePoint> minimizer_curve(const NormSpec& n,
                                        const DiscreteDistribution& d,
                                        const std::vector<double>& betas) {
  require_sorted_levels(betas);
  std::vector<CurvePoint> out(betas.size());
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(betas.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    const HigherOrderResult r = higher_order_risk(n, betas[k], d);
    out[k] = {r.beta, r.t_star, r.value};
  }
  return out;
}

std::vector<CurvePoint> minimizer_curve_serial(
    const NormSpec& n, const DiscreteDistribution& d,
    const std::vector<double>& betas) {
  require_sorted_levels(betas);
  std::vector<CurvePoint> out(betas.size());
  for (std::size_t k = 0; k < betas.size(); ++k) {
    const HigherOrderResult r = higher_order_risk(n, betas[k], d);
    out[k] = {r.beta, r.t_star, r.value};
  }
  return out;
}

RiskDerivative risk_derivative(const NormSpec& n, const DiscreteDistribution& d,
                               double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("risk level must lie in (0, 1)");
  }
  const HigherOrderResult r = higher_order_risk(n, beta, d);
  const double value = (r.value - r.t_star) / (1.0 - beta);

  // The minimizer is a step function of the level for piecewise-linear
  // objectives; it jumps where the truncation point crosses a cumulative
  // probability of d.
  bool near = false;
  std::optional<KusuokaMixture> as_mixture;
  if (n.kind() == NormSpec::Kind::spectral) {
    as_mixture = n.mixture();
  } else if (n.kind() == NormSpec::Kind::holder && n.holder_p() == 1.0) {
    as_mixture = KusuokaMixture::avar_at(0.0);
  }
  if (as_mixture) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (std::fabs(beta - tail_level(*as_mixture, d.cum(i))) <= 1e-9) {
        near = true;
      }
    }
  }
  return {value, near};
}

double weighted_value(const NormSpec& n, const DiscreteDistribution& d,
                      double beta) {
  return (1.0 - beta) * higher_order_risk(n, beta, d).value;
}

}  // namespace hrisk
