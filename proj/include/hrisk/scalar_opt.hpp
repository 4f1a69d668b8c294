#pragma once

#include <cmath>

namespace hrisk {

/// Golden-section minimization of a unimodal function on [lo, hi] down to an
/// absolute bracket width of tol. The width floor never drops below machine
/// resolution around the endpoints, and the iteration count is capped, so
/// the search terminates for any tol. Ties shrink the bracket from the
/// right, so flat stretches resolve toward the smaller argument. Returns
/// the midpoint of the final bracket.
template <class F>
double golden_min(F&& f, double lo, double hi, double tol) {
  constexpr double ratio = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - ratio * (b - a);
  double x2 = a + ratio * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 256; ++it) {
    const double floor_tol =
        1e-15 * (std::fabs(a) + std::fabs(b)) + 1e-300;
    if (!(b - a > tol) || !(b - a > floor_tol)) break;
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - ratio * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + ratio * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

template <class F>
double golden_max(F&& f, double lo, double hi, double tol) {
  auto neg = [&f](double x) { return -f(x); };
  return golden_min(neg, lo, hi, tol);
}

}  // namespace hrisk
