// Times the parallel sweep kernels against their single-threaded twins.
// Usage: bench_sweeps [points]  (default 20000)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "hrisk/dominance.hpp"
#include "hrisk/higher_order.hpp"
#include "hrisk/oracle.hpp"
#include "hrisk/spectral.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

hrisk::DiscreteDistribution random_law(std::mt19937_64& rng, int atoms) {
  std::uniform_real_distribution<double> val(-10.0, 10.0);
  std::uniform_real_distribution<double> wt(0.1, 1.0);
  std::vector<hrisk::DiscreteDistribution::Atom> pairs;
  for (int i = 0; i < atoms; ++i) {
    pairs.push_back({val(rng), wt(rng)});
  }
  return hrisk::DiscreteDistribution::from_weights(std::move(pairs));
}

}  // namespace

int main(int argc, char** argv) {
  const int points = argc > 1 ? std::atoi(argv[1]) : 20000;
  if (points < 2) {
    std::fprintf(stderr, "need at least 2 points\n");
    return 2;
  }

  std::mt19937_64 rng(20240817);
  const auto d = random_law(rng, 64);
  const auto x = random_law(rng, 64);
  const auto y = random_law(rng, 64);
  const auto n = hrisk::NormSpec::holder(2.0);

  std::vector<double> betas;
  for (int i = 0; i < points; ++i) {
    betas.push_back(0.999 * i / (points - 1));
  }

  auto t0 = clock_type::now();
  const auto curve_par = hrisk::minimizer_curve(n, d, betas);
  const double curve_par_s = seconds_since(t0);

  t0 = clock_type::now();
  const auto curve_ser = hrisk::minimizer_curve_serial(n, d, betas);
  const double curve_ser_s = seconds_since(t0);

  double max_gap = 0.0;
  for (std::size_t i = 0; i < curve_par.size(); ++i) {
    const double gap = std::abs(curve_par[i].value - curve_ser[i].value);
    if (gap > max_gap) max_gap = gap;
  }

  const double lo = std::min(x.value(0), y.value(0));
  const double hi = std::max(x.value(x.size() - 1), y.value(y.size() - 1));
  const double span = hi - lo;
  const hrisk::GridSpec g{lo - span, hi + span, points};
  t0 = clock_type::now();
  const auto sweep_par = hrisk::dense_dominance_sweep(x, y, n, g);
  const double sweep_par_s = seconds_since(t0);

  t0 = clock_type::now();
  const auto sweep_ser = hrisk::dense_dominance_sweep_serial(x, y, n, g);
  const double sweep_ser_s = seconds_since(t0);

  std::printf("points              %d\n", points);
  std::printf("curve parallel      %.4fs\n", curve_par_s);
  std::printf("curve serial        %.4fs  (x%.2f)\n", curve_ser_s,
              curve_ser_s / curve_par_s);
  std::printf("curve max gap       %.3e\n", max_gap);
  std::printf("sweep parallel      %.4fs\n", sweep_par_s);
  std::printf("sweep serial        %.4fs  (x%.2f)\n", sweep_ser_s,
              sweep_ser_s / sweep_par_s);
  std::printf("sweep margins agree %s\n",
              sweep_par.margin == sweep_ser.margin ? "yes" : "NO");
  return 0;
}
