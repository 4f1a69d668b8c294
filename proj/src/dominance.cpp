#include "hrisk/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hrisk/scalar_opt.hpp"

namespace hrisk {

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kSearchTol = 1e-9;
constexpr double kLevelLo = 1e-9;
constexpr double kLevelHi = 1.0 - 1e-6;

// kExactTol absorbs additive float noise (reordered probability sums), so
// a margin above it counts as holding; the band down to tol is reported as
// undetermined. Exact comparisons pass tol == kExactTol and never return
// undetermined.
DominanceVerdict make_verdict(double margin, double at, double tol,
                              bool sufficient) {
  DominanceVerdict v;
  v.margin = margin;
  v.sufficient = sufficient;
  if (margin >= -kExactTol) {
    v.outcome = Outcome::yes;
  } else if (margin >= -tol) {
    v.outcome = Outcome::undetermined;
    v.witness = at;
  } else {
    v.outcome = Outcome::no;
    v.witness = at;
  }
  return v;
}

std::vector<double> union_points(const DiscreteDistribution& x,
                                 const DiscreteDistribution& y) {
  std::vector<double> pts;
  pts.reserve(x.size() + y.size());
  for (std::size_t i = 0; i < x.size(); ++i) pts.push_back(x.value(i));
  for (std::size_t i = 0; i < y.size(); ++i) pts.push_back(y.value(i));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Tracks the smallest slack seen and the leftmost point attaining it.
struct MarginScan {
  double margin = std::numeric_limits<double>::infinity();
  double at = 0.0;
  void consider(double point, double slack) {
    if (slack < margin) {
      margin = slack;
      at = point;
    }
  }
};

// Levels at which the minimizer curve of d under the mixture norm jumps:
// the curve is quantile(d, u_beta), constant until u_beta crosses a
// cumulative probability of d.
void append_jump_levels(const KusuokaMixture& m, const DiscreteDistribution& d,
                        std::vector<double>* out) {
  double cum = 0.0;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    cum += d.prob(i);
    const double b = tail_level(m, std::min(cum, 1.0));
    if (b > kLevelLo && b < kLevelHi) out->push_back(b);
  }
}

void sort_strictly_increasing(std::vector<double>* betas) {
  std::sort(betas->begin(), betas->end());
  std::vector<double> kept;
  for (double b : *betas) {
    if (kept.empty() || b - kept.back() > 1e-12) kept.push_back(b);
  }
  *betas = std::move(kept);
}

// deltas[i] is the constant minimizer difference on (walls[i], walls[i+1]).
// Sign changes between adjacent intervals put a crossing exactly at the
// shared wall; runs of exact ties contribute both bounding walls.
void collect_step_crossings(const std::vector<double>& walls,
                            const std::vector<double>& deltas,
                            std::vector<double>* out) {
  const std::size_t n = deltas.size();
  std::size_t i = 0;
  while (i < n) {
    if (deltas[i] == 0.0) {
      std::size_t j = i;
      while (j + 1 < n && deltas[j + 1] == 0.0) ++j;
      out->push_back(walls[i]);
      out->push_back(walls[j + 1]);
      i = j + 1;
      continue;
    }
    if (i + 1 < n && deltas[i + 1] != 0.0 &&
        std::signbit(deltas[i]) != std::signbit(deltas[i + 1])) {
      out->push_back(walls[i + 1]);
    }
    ++i;
  }
}

// deltas[i] is the minimizer difference at grid[i]. Sign changes between
// consecutive nonzero points are refined by bisection; runs of
// within-tolerance ties contribute the run's end grid points.
template <class F>
void collect_grid_crossings(const std::vector<double>& grid,
                            const std::vector<double>& deltas, F&& delta_at,
                            std::vector<double>* out) {
  const std::size_t n = deltas.size();
  std::size_t i = 0;
  while (i < n) {
    if (deltas[i] == 0.0) {
      std::size_t j = i;
      while (j + 1 < n && deltas[j + 1] == 0.0) ++j;
      out->push_back(grid[i]);
      out->push_back(grid[j]);
      i = j + 1;
      continue;
    }
    if (i + 1 < n && deltas[i + 1] != 0.0 &&
        std::signbit(deltas[i]) != std::signbit(deltas[i + 1])) {
      double lo = grid[i];
      double hi = grid[i + 1];
      double flo = deltas[i];
      while (hi - lo > kSearchTol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = delta_at(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(flo)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      out->push_back(0.5 * (lo + hi));
    }
    ++i;
  }
}

}  // namespace

DominanceVerdict first_order(const DiscreteDistribution& x,
                             const DiscreteDistribution& y) {
  MarginScan scan;
  for (double t : union_points(x, y)) {
    scan.consider(t, cdf(x, t) - cdf(y, t));
  }
  return make_verdict(scan.margin, scan.at, kExactTol, true);
}

DominanceVerdict p_order(const DiscreteDistribution& x,
                         const DiscreteDistribution& y, double p) {
  if (!std::isfinite(p) || p < 1.0) {
    throw std::invalid_argument("dominance order must be a finite real >= 1");
  }
  if (p == 1.0) return first_order(x, y);
  const auto delta = [&](double t) {
    return partial_moment(x, t, p - 1.0, Tail::lower) -
           partial_moment(y, t, p - 1.0, Tail::lower);
  };
  const auto pts = union_points(x, y);
  const double reach = std::max(1.0, pts.back() - pts.front());
  MarginScan scan;
  for (double t : pts) scan.consider(t, delta(t));
  const double far = pts.back() + 2.0 * reach;
  scan.consider(far, delta(far));
  if (p != 2.0) {
    // Between breakpoints the slack is smooth but not linear; its interior
    // minimum can undercut both endpoint values.
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (pts[i + 1] - pts[i] <= 1e-14) continue;
      const double t = golden_min(delta, pts[i], pts[i + 1], 1e-10 * reach);
      scan.consider(t, delta(t));
    }
    const double t = golden_min(delta, pts.back(), far, 1e-10 * reach);
    scan.consider(t, delta(t));
  }
  const double tol = p == 2.0 ? kExactTol : kSearchTol;
  return make_verdict(scan.margin, scan.at, tol, true);
}

std::pair<double, double> integer_order_integrals(const DiscreteDistribution& x,
                                                  const DiscreteDistribution& y,
                                                  int k, double t) {
  if (k < 2) {
    throw std::invalid_argument("repeated integral order must be at least 2");
  }
  double factorial = 1.0;
  for (int i = 2; i < k; ++i) factorial *= i;
  return {partial_moment(x, t, k - 1.0, Tail::lower) / factorial,
          partial_moment(y, t, k - 1.0, Tail::lower) / factorial};
}

DominanceVerdict spectral_order(const DiscreteDistribution& x,
                                const DiscreteDistribution& y,
                                const KusuokaMixture& m) {
  const auto delta = [&](double t) {
    return spectral_risk(m, shortfall_law(x, t)) -
           spectral_risk(m, shortfall_law(y, t));
  };
  const auto pts = union_points(x, y);
  const double reach = std::max(1.0, pts.back() - pts.front());
  MarginScan scan;
  scan.consider(pts.front() - reach, delta(pts.front() - reach));
  for (double t : pts) scan.consider(t, delta(t));
  scan.consider(pts.back() + reach, delta(pts.back() + reach));
  return make_verdict(scan.margin, scan.at, kExactTol, true);
}

DominanceVerdict risk_profile_order(const DiscreteDistribution& x,
                                    const DiscreteDistribution& y,
                                    const NormSpec& n,
                                    const std::vector<double>& betas,
                                    bool certified_levels) {
  if (betas.empty()) {
    throw std::invalid_argument("profile comparison needs at least one level");
  }
  const auto neg_x = negate(x);
  const auto neg_y = negate(y);
  MarginScan scan;
  for (double b : betas) {
    if (!(b >= 0.0) || !(b < 1.0)) {
      throw std::invalid_argument("profile level must lie in [0, 1)");
    }
    const double slack = higher_order_risk(n, b, neg_x).value -
                         higher_order_risk(n, b, neg_y).value;
    scan.consider(b, slack);
  }
  return make_verdict(scan.margin, scan.at, kSearchTol, certified_levels);
}

CriticalLevels critical_levels(const DiscreteDistribution& x,
                               const DiscreteDistribution& y,
                               const NormSpec& n, double resolution) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw std::invalid_argument("level resolution must be positive");
  }
  const auto neg_x = negate(x);
  const auto neg_y = negate(y);
  const bool step_curves =
      n.kind() == NormSpec::Kind::spectral ||
      (n.kind() == NormSpec::Kind::holder && n.holder_p() == 1.0);

  std::vector<double> found{kLevelLo, kLevelHi};
  const auto t_diff = [&](double b) {
    return higher_order_risk(n, b, neg_x).t_star -
           higher_order_risk(n, b, neg_y).t_star;
  };

  if (step_curves) {
    // Both minimizer curves are step functions of the level; between
    // consecutive jump levels the difference is constant, so evaluating at
    // interval midpoints decides crossings and coincidence exactly.
    const KusuokaMixture m = n.kind() == NormSpec::Kind::spectral
                                 ? n.mixture()
                                 : KusuokaMixture::avar_at(0.0);
    std::vector<double> walls{kLevelLo};
    append_jump_levels(m, neg_x, &walls);
    append_jump_levels(m, neg_y, &walls);
    walls.push_back(kLevelHi);
    sort_strictly_increasing(&walls);
    std::vector<double> deltas(walls.size() - 1);
    for (std::size_t i = 0; i + 1 < walls.size(); ++i) {
      deltas[i] = t_diff(0.5 * (walls[i] + walls[i + 1]));
    }
    collect_step_crossings(walls, deltas, &found);
  } else {
    const int steps =
        std::max(1, static_cast<int>(std::ceil((kLevelHi - kLevelLo) /
                                               resolution)));
    std::vector<double> grid(steps + 1);
    for (int i = 0; i <= steps; ++i) {
      grid[i] = kLevelLo + (kLevelHi - kLevelLo) * i / steps;
    }
    const auto curve_x = minimizer_curve(n, neg_x, grid);
    const auto curve_y = minimizer_curve(n, neg_y, grid);
    std::vector<double> deltas(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double d = curve_x[i].t_star - curve_y[i].t_star;
      const double scale =
          1.0 + std::fabs(curve_x[i].t_star) + std::fabs(curve_y[i].t_star);
      if (std::fabs(d) <= 1e-10 * scale) d = 0.0;
      deltas[i] = d;
    }
    collect_grid_crossings(grid, deltas, t_diff, &found);
  }

  sort_strictly_increasing(&found);
  CriticalLevels out;
  out.betas = std::move(found);
  return out;
}

DominanceVerdict verify_dominance(const DiscreteDistribution& x,
                                  const DiscreteDistribution& y,
                                  const NormSpec& n) {
  const auto levels = critical_levels(x, y, n, 1.0 / 256.0);
  std::vector<double> test = levels.betas;
  for (std::size_t i = 0; i + 1 < levels.betas.size(); ++i) {
    test.push_back(0.5 * (levels.betas[i] + levels.betas[i + 1]));
  }
  std::sort(test.begin(), test.end());
  return risk_profile_order(x, y, n, test, true);
}

std::pair<DominanceVerdict, DominanceVerdict> order_implication_check(
    const DiscreteDistribution& x, const DiscreteDistribution& y, double p,
    double p_prime) {
  if (!(p >= 1.0) || !(p_prime > p) || !std::isfinite(p_prime)) {
    throw std::invalid_argument("orders must satisfy 1 <= p < p'");
  }
  return {p_order(x, y, p), p_order(x, y, p_prime)};
}

}  // namespace hrisk
