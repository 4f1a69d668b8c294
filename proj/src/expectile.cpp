#include "hrisk/expectile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hrisk/scalar_opt.hpp"
#include "hrisk/spectral.hpp"

namespace hrisk {

namespace {

void require_risk_level(double alpha) {
  if (!(alpha >= 0.5 && alpha < 1.0)) {
    throw std::invalid_argument("asymmetry level must lie in [1/2, 1)");
  }
}

// Score whose root is the expectile. Non-increasing in x, strictly
// decreasing across the support.
double score(double alpha, const DiscreteDistribution& d, double x) {
  return alpha * partial_moment(d, x, 1.0, Tail::upper) -
         (1.0 - alpha) * partial_moment(d, x, 1.0, Tail::lower);
}

}  // namespace

ExpectileParams ExpectileParams::from_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("asymmetry level must lie in (0, 1)");
  }
  return ExpectileParams{alpha, (1.0 - alpha) / alpha};
}

double expectile(double alpha, const DiscreteDistribution& d) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("asymmetry level must lie in (0, 1)");
  }
  const std::size_t n = d.size();
  if (n == 1) return d.value(0);

  // score(value(0)) > 0 > score(value(n-1)) for a non-degenerate law, and
  // the score is linear between consecutive atoms. Bisect on atom indices
  // for the last one with positive score, then invert on that segment.
  std::size_t lo = 0;
  std::size_t hi = n - 1;
  while (lo + 1 < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (score(alpha, d, d.value(mid)) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double left = d.value(lo);
  const double s = score(alpha, d, left);
  if (s <= 0.0) return left;
  // On (value(lo), value(hi)) the score falls at rate
  // alpha * P(Y > left) + (1 - alpha) * P(Y <= left).
  const double slope =
      alpha * survival(d, left) + (1.0 - alpha) * cdf(d, left);
  const double root = left + s / slope;
  return std::min(std::max(root, left), d.value(hi));
}

double expectile_kusuoka(double alpha, const DiscreteDistribution& d) {
  require_risk_level(alpha);
  const Summary s = summary(d);
  if (alpha == 0.5) return s.mean;
  const double eta = (1.0 - alpha) / alpha;
  const double gmax = 1.0 - eta;

  auto objective = [&](double g) {
    double level = 1.0 - (g / (1.0 - g)) * (eta / (1.0 - eta));
    if (level < -1e-12) return -std::numeric_limits<double>::infinity();
    level = std::min(std::max(level, 0.0), 1.0);
    return (1.0 - g) * s.mean + g * avar(level, d);
  };

  // The tail level hits a cumulative breakpoint c at
  // gamma = r / (1 + r) with r = (1 - c)(1 - eta)/eta; between those
  // points the objective is linear in gamma.
  std::vector<double> grid{0.0, gmax};
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    const double c = d.cum(i);
    const double r = (1.0 - c) * (1.0 - eta) / eta;
    const double g = r / (1.0 + r);
    if (g > 0.0 && g < gmax) grid.push_back(g);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = objective(grid[i]);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  const double lo = grid[best_i > 0 ? best_i - 1 : 0];
  const double hi = grid[std::min(best_i + 1, grid.size() - 1)];
  if (hi > lo) {
    const double polished =
        objective(golden_max(objective, lo, hi, 1e-12 * std::max(1.0, gmax)));
    best = std::max(best, polished);
  }
  return best;
}

double expectile_dual_norm(double alpha, const DiscreteDistribution& z) {
  require_risk_level(alpha);
  const double eta = (1.0 - alpha) / alpha;
  const DiscreteDistribution za = abs_law(z);
  const double zmax = za.value(za.size() - 1);

  // (1 - b) * AVaR_b(|Z|) is piecewise linear in b with kinks at the
  // cumulative breakpoints, so the supremum is attained on them or at an
  // endpoint.
  double best = eta * zmax;  // b -> 1
  auto consider = [&](double b) {
    const double v = (1.0 - b) * avar(b, za) + b * eta * zmax;
    best = std::max(best, v);
  };
  consider(0.0);
  for (std::size_t i = 0; i + 1 < za.size(); ++i) consider(za.cum(i));
  return best;
}

std::vector<double> expectile_gamma_grid(double alpha, double beta,
                                         const DiscreteDistribution& d) {
  require_risk_level(alpha);
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("tail level must lie in [0, 1)");
  }
  const double eta = (1.0 - alpha) / alpha;
  const double gmax = 1.0 - eta;
  std::vector<double> grid{0.0};
  if (gmax <= 0.0) return grid;
  grid.push_back(gmax);

  auto admit = [&](double g) {
    if (g > 0.0 && g < gmax) grid.push_back(g);
  };
  // Where the mixture collapses to a single tail average.
  admit((1.0 - beta) * gmax);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double c = d.cum(i);
    if (c >= 1.0) break;
    // First tail level beta / (1 - gamma) crosses c.
    if (beta > 0.0 && c >= beta) admit(1.0 - beta / c);
    // Second tail level 1 - (gamma/(1-gamma)) (eta/(1-eta)) crosses c.
    if (eta < 1.0) {
      const double r = (1.0 - c) * (1.0 - eta) / eta;
      admit(r / (1.0 + r));
    }
    // Collapsed-branch level 1 - (1-beta) eta / (1-gamma) crosses c.
    admit(1.0 - (1.0 - beta) * eta / (1.0 - c));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

double higher_order_expectile(double alpha, double beta,
                              const DiscreteDistribution& d) {
  require_risk_level(alpha);
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("tail level must lie in [0, 1)");
  }
  if (alpha == 0.5) return avar(beta, d);
  const double eta = (1.0 - alpha) / alpha;
  const double gmax = 1.0 - eta;

  auto objective = [&](double g) {
    if (g / (1.0 - beta) < gmax) {
      const double head = beta / (1.0 - g);
      double tail = 1.0 - (g / (1.0 - g)) * (eta / (1.0 - eta));
      if (head < 1.0) {
        if (tail < -1e-12) return -std::numeric_limits<double>::infinity();
        tail = std::min(std::max(tail, 0.0), 1.0);
        const double w = g / (1.0 - beta);
        return (1.0 - w) * avar(head, d) + w * avar(tail, d);
      }
      // Unreachable for gamma in [0, (1-beta)(1-eta)); kept so that any
      // float drift lands on the collapsed branch instead of throwing.
    }
    double level = 1.0 - (1.0 - beta) * eta / (1.0 - g);
    level = std::min(std::max(level, 0.0), 1.0);
    return avar(level, d);
  };

  const std::vector<double> grid = expectile_gamma_grid(alpha, beta, d);
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = objective(grid[i]);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  const double lo = grid[best_i > 0 ? best_i - 1 : 0];
  const double hi = grid[std::min(best_i + 1, grid.size() - 1)];
  if (hi > lo) {
    const double polished =
        objective(golden_max(objective, lo, hi, 1e-12 * std::max(1.0, gmax)));
    best = std::max(best, polished);
  }
  return best;
}

}  // namespace hrisk
