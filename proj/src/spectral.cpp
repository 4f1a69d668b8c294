#include "hrisk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hrisk {

KusuokaMixture KusuokaMixture::build(std::vector<Atom> pairs, bool weights,
                                     double sum_tolerance) {
  if (pairs.empty()) {
    throw std::invalid_argument("mixture needs at least one atom");
  }
  for (const auto& a : pairs) {
    if (!(a.alpha >= 0.0 && a.alpha < 1.0)) {
      throw std::invalid_argument("mixture level must lie in [0, 1)");
    }
    if (!(a.weight > 0.0) || !std::isfinite(a.weight)) {
      throw std::invalid_argument("mixture weight must be positive");
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Atom& a, const Atom& b) { return a.alpha < b.alpha; });

  std::vector<Atom> merged;
  merged.reserve(pairs.size());
  for (const auto& a : pairs) {
    if (!merged.empty() && merged.back().alpha == a.alpha) {
      merged.back().weight += a.weight;
    } else {
      merged.push_back(a);
    }
  }

  double total = 0.0;
  for (const auto& a : merged) total += a.weight;
  if (!weights && std::abs(total - 1.0) > sum_tolerance) {
    throw std::invalid_argument("mixture weights do not sum to 1");
  }

  KusuokaMixture m;
  m.alphas_.reserve(merged.size());
  m.weights_.reserve(merged.size());
  for (const auto& a : merged) {
    m.alphas_.push_back(a.alpha);
    m.weights_.push_back(a.weight / total);
  }
  return m;
}

KusuokaMixture KusuokaMixture::from_atoms(std::vector<Atom> pairs,
                                          double sum_tolerance) {
  return build(std::move(pairs), false, sum_tolerance);
}

KusuokaMixture KusuokaMixture::from_weights(std::vector<Atom> pairs) {
  return build(std::move(pairs), true, 0.0);
}

KusuokaMixture KusuokaMixture::avar_at(double alpha) {
  return from_atoms({{alpha, 1.0}});
}

double sigma_eval(const KusuokaMixture& m, double u) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw std::invalid_argument("spectral density argument must lie in [0, 1)");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size() && m.alpha(i) <= u; ++i) {
    acc += m.weight(i) / (1.0 - m.alpha(i));
  }
  return acc;
}

double sigma_integral(const KusuokaMixture& m, double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::invalid_argument("integration bound must lie in [0, 1]");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    acc += m.weight(i) * (1.0 - std::max(u, m.alpha(i))) / (1.0 - m.alpha(i));
  }
  return acc;
}

double tail_level(const KusuokaMixture& m, double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::invalid_argument("truncation point must lie in [0, 1]");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    acc += m.weight(i) * std::max(0.0, u - m.alpha(i)) / (1.0 - m.alpha(i));
  }
  return acc;
}

double avar(double alpha, const DiscreteDistribution& d) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("tail level must lie in [0, 1]");
  }
  if (alpha == 1.0) return d.value(d.size() - 1);
  if (alpha == 0.0) return summary(d).mean;
  double acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double hi = d.cum(i);
    if (hi <= alpha) continue;
    const double lo = std::max(alpha, i == 0 ? 0.0 : d.cum(i - 1));
    acc += d.value(i) * (hi - lo);
  }
  return acc / (1.0 - alpha);
}

double spectral_risk(const KusuokaMixture& m, const DiscreteDistribution& d) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    acc += m.weight(i) * avar(m.alpha(i), d);
  }
  return acc;
}

namespace {

// Pull values that land within rounding distance of a breakpoint onto it, so
// that downstream half-open interval splits see the exact boundary.
double snap_to_breakpoints(double u, const std::vector<double>& breaks) {
  for (double b : breaks) {
    if (std::abs(u - b) <= 1e-14) return b;
  }
  return u;
}

}  // namespace

double u_beta(const KusuokaMixture& m, double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("composition level must lie in [0, 1)");
  }
  if (beta == 0.0) return 0.0;
  // phi(u) = sum_i w_i max(0, u - alpha_i)/(1 - alpha_i) is piecewise linear
  // with one breakpoint per atom; walk segments until phi reaches beta.
  double phi = 0.0;
  double slope = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double left = m.alpha(i);
    slope += m.weight(i) / (1.0 - left);
    const double right = i + 1 < m.size() ? m.alpha(i + 1) : 1.0;
    const double phi_right = phi + slope * (right - left);
    if (i + 1 == m.size() || phi_right >= beta) {
      const double u = left + (beta - phi) / slope;
      return snap_to_breakpoints(u, m.alphas());
    }
    phi = phi_right;
  }
  return 0.0;  // unreachable: the last segment always reaches beta < 1
}

TruncationResult truncate_mixture(const KusuokaMixture& m, double beta) {
  const double u = u_beta(m, beta);
  double head = 0.0;
  std::vector<KusuokaMixture::Atom> atoms;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.alpha(i) <= u) {
      head += m.weight(i) / (1.0 - m.alpha(i));
    } else {
      atoms.push_back({m.alpha(i), m.weight(i) / (1.0 - beta)});
    }
  }
  const double p0 = (1.0 - u) / (1.0 - beta) * head;
  if (p0 > 0.0) atoms.push_back({u, p0});
  // the weights sum to 1 exactly in real arithmetic; allow rounding drift
  return {KusuokaMixture::from_atoms(std::move(atoms), 1e-9), u, p0};
}

CollapseInfo collapse_info(const KusuokaMixture& m) {
  double mass = 0.0;
  double level = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    mass += m.weight(i) / (1.0 - m.alpha(i));
    level += m.alpha(i) * m.weight(i) / (1.0 - m.alpha(i));
  }
  const double top = m.alpha(m.size() - 1);
  const double threshold = std::max(0.0, 1.0 - (1.0 - top) * mass);
  return {threshold, level / mass};
}

KusuokaMixture weaken_order(const KusuokaMixture& sigma,
                            const KusuokaMixture& mu) {
  // step weight w(u) = sum_j v_j/(1-beta_j) over atoms of mu with
  // u_{beta_j} <= u
  std::vector<double> jump_at(mu.size());
  std::vector<double> jump_size(mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j) {
    jump_at[j] = u_beta(sigma, mu.alpha(j));
    jump_size[j] = mu.weight(j) / (1.0 - mu.alpha(j));
  }

  std::vector<double> breaks;
  breaks.reserve(sigma.size() + mu.size());
  for (double a : sigma.alphas()) breaks.push_back(a);
  for (double b : jump_at) breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const auto weight_at = [&](double u) {
    double acc = 0.0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      if (jump_at[j] <= u) acc += jump_size[j];
    }
    return acc;
  };

  std::vector<KusuokaMixture::Atom> atoms;
  double prev = 0.0;
  double total = 0.0;
  for (double b : breaks) {
    const double s = sigma_eval(sigma, b) * weight_at(b);
    const double step = s - prev;
    prev = s;
    if (step <= 0.0) continue;
    const double w = step * (1.0 - b);
    atoms.push_back({b, w});
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::invalid_argument(
        "weakened spectral function does not integrate to 1");
  }
  return KusuokaMixture::from_weights(std::move(atoms));
}

}  // namespace hrisk
