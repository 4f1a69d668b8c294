#include "hrisk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hrisk/scalar_opt.hpp"

namespace hrisk {

namespace {

void require_grid(const GridSpec& g) {
  if (!(g.points >= 2) || !(g.lo < g.hi) || !std::isfinite(g.lo) ||
      !std::isfinite(g.hi)) {
    throw std::invalid_argument("grid needs lo < hi and at least two points");
  }
}

double grid_at(const GridSpec& g, int i) {
  return g.lo + (g.hi - g.lo) * i / (g.points - 1);
}

void require_cover(const GridSpec& g, double lo, double hi, const char* what) {
  if (g.lo > lo + 1e-9 || g.hi < hi - 1e-9) {
    throw std::invalid_argument(what);
  }
}

std::vector<double> sweep_slacks(const DiscreteDistribution& x,
                                 const DiscreteDistribution& y,
                                 const NormSpec& n, const GridSpec& g,
                                 bool parallel) {
  std::vector<double> slack(g.points);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int i = 0; i < g.points; ++i) {
    const double t = grid_at(g, i);
    slack[i] = norm_value(n, shortfall_law(x, t)) -
               norm_value(n, shortfall_law(y, t));
  }
  (void)parallel;
  return slack;
}

DominanceVerdict sweep_verdict(const DiscreteDistribution& x,
                               const DiscreteDistribution& y,
                               const NormSpec& n, const GridSpec& g,
                               bool parallel) {
  require_grid(g);
  const double lo = std::min(x.value(0), y.value(0));
  const double hi = std::max(x.value(x.size() - 1), y.value(y.size() - 1));
  const double span = hi - lo;
  require_cover(g, lo - span, hi + span,
                "sweep grid must cover the union support plus one span");

  const auto slack = sweep_slacks(x, y, n, g, parallel);
  double margin = std::numeric_limits<double>::infinity();
  int arg = 0;
  for (int i = 0; i < g.points; ++i) {
    if (slack[i] < margin) {
      margin = slack[i];
      arg = i;
    }
  }
  DominanceVerdict v;
  v.margin = margin;
  v.sufficient = false;
  if (margin >= -1e-12) {
    v.outcome = Outcome::yes;
  } else {
    v.outcome = margin >= -1e-9 ? Outcome::undetermined : Outcome::no;
    v.witness = grid_at(g, arg);
  }
  return v;
}

}  // namespace

double grid_min_higher_order(const NormSpec& n, double beta,
                             const DiscreteDistribution& d, const GridSpec& g) {
  require_grid(g);
  if (!(beta >= 0.0) || !(beta < 1.0)) {
    throw std::invalid_argument("risk level must lie in [0, 1)");
  }
  const double lo = d.value(0);
  const double hi = d.value(d.size() - 1);
  require_cover(g, lo - (hi - lo), hi,
                "grid must cover the minimization bracket");

  const auto objective = [&](double t) {
    return t + norm_value(n, excess_law(d, t)) / (1.0 - beta);
  };
  double best = std::numeric_limits<double>::infinity();
  int arg = 0;
  for (int i = 0; i < g.points; ++i) {
    const double v = objective(grid_at(g, i));
    if (v < best) {
      best = v;
      arg = i;
    }
  }
  // The objective is convex, so the true minimizer lies within one grid
  // step of the best grid point.
  const double a = grid_at(g, std::max(0, arg - 1));
  const double b = grid_at(g, std::min(g.points - 1, arg + 1));
  const double t = golden_min(objective, a, b, 1e-12 * (g.hi - g.lo));
  return std::min(best, objective(t));
}

double dual_avar_sup(double beta, const DiscreteDistribution& d) {
  if (!(beta >= 0.0) || !(beta < 1.0)) {
    throw std::invalid_argument("risk level must lie in [0, 1)");
  }
  const double cap = 1.0 / (1.0 - beta);
  double budget = 1.0;
  double acc = 0.0;
  for (std::size_t i = d.size(); i-- > 0 && budget > 0.0;) {
    const double mass = std::min(budget, cap * d.prob(i));
    acc += mass * d.value(i);
    budget -= mass;
  }
  return acc;
}

double loss_argmin_expectile(double alpha, const DiscreteDistribution& d,
                             const GridSpec& g) {
  require_grid(g);
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("asymmetry level must lie in (0, 1)");
  }
  require_cover(g, d.value(0), d.value(d.size() - 1),
                "grid must cover the support");
  const auto loss = [&](double t) {
    return alpha * partial_moment(d, t, 2.0, Tail::upper) +
           (1.0 - alpha) * partial_moment(d, t, 2.0, Tail::lower);
  };
  double best = std::numeric_limits<double>::infinity();
  int arg = 0;
  for (int i = 0; i < g.points; ++i) {
    const double v = loss(grid_at(g, i));
    if (v < best) {
      best = v;
      arg = i;
    }
  }
  const double a = grid_at(g, std::max(0, arg - 1));
  const double b = grid_at(g, std::min(g.points - 1, arg + 1));
  return golden_min(loss, a, b, 1e-9 * (g.hi - g.lo));
}

DominanceVerdict dense_dominance_sweep(const DiscreteDistribution& x,
                                       const DiscreteDistribution& y,
                                       const NormSpec& n, const GridSpec& g) {
  return sweep_verdict(x, y, n, g, true);
}

DominanceVerdict dense_dominance_sweep_serial(const DiscreteDistribution& x,
                                              const DiscreteDistribution& y,
                                              const NormSpec& n,
                                              const GridSpec& g) {
  return sweep_verdict(x, y, n, g, false);
}

}  // namespace hrisk
