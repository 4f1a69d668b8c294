#pragma once

#include <cstddef>
#include <vector>

namespace hrisk {

/// Tail selector for partial moments: lower integrates (t - Y)+, upper (Y - t)+.
enum class Tail { lower, upper };

struct Summary {
  double mean;
  double essinf;
  double esssup;
};

/// Finite discrete law. Atoms are held sorted with strictly increasing values,
/// strictly positive probabilities, and a cumulative vector whose last entry
/// is exactly 1 after renormalization.
class DiscreteDistribution {
 public:
  struct Atom {
    double value;
    double prob;
  };

  /// Sorts the pairs, merges exactly equal values, and renormalizes the
  /// probabilities by their sum. The raw sum must be within `sum_tolerance`
  /// of 1; data further off is rejected as a likely input error.
  static DiscreteDistribution from_atoms(std::vector<Atom> pairs,
                                         double sum_tolerance = 1e-12);

  /// Like from_atoms but treats the probabilities as raw weights: any
  /// positive sum is accepted and renormalized.
  static DiscreteDistribution from_weights(std::vector<Atom> pairs);

  std::size_t size() const { return values_.size(); }
  double value(std::size_t i) const { return values_[i]; }
  double prob(std::size_t i) const { return probs_[i]; }
  /// Cumulative probability through atom i; cum(size()-1) == 1 exactly.
  double cum(std::size_t i) const { return cum_[i]; }

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  DiscreteDistribution() = default;
  static DiscreteDistribution build(std::vector<Atom> pairs, bool weights,
                                    double sum_tolerance);

  std::vector<double> values_;
  std::vector<double> probs_;
  std::vector<double> cum_;
};

/// Left-continuous generalized inverse, inf{x : P(Y <= x) >= u}.
/// quantile(d, 0) is the smallest atom, quantile(d, 1) the largest.
double quantile(const DiscreteDistribution& d, double u);

/// Right-continuous step function P(Y <= x).
double cdf(const DiscreteDistribution& d, double x);

/// 1 - cdf(d, x), computed as the exact complement.
double survival(const DiscreteDistribution& d, double x);

/// E max(0, t - Y)^r (lower) or E max(0, Y - t)^r (upper), with 0^0 = 0 so
/// that r = 0 counts only the strictly positive part.
double partial_moment(const DiscreteDistribution& d, double t, double r,
                      Tail side);

Summary summary(const DiscreteDistribution& d);

/// Law of -Y.
DiscreteDistribution negate(const DiscreteDistribution& d);

/// (E |Y|^p)^(1/p); p may be infinity, giving max |y_i|.
double lp_norm(const DiscreteDistribution& d, double p);

/// Law of Y + c.
DiscreteDistribution translate(const DiscreteDistribution& d, double c);

/// Law of c * Y for c > 0.
DiscreteDistribution scale(const DiscreteDistribution& d, double c);

/// Law of |Y|.
DiscreteDistribution abs_law(const DiscreteDistribution& d);

/// Law of (Y - t)+, the excess of Y over the threshold t.
DiscreteDistribution excess_law(const DiscreteDistribution& d, double t);

/// Law of (t - Y)+, the shortfall of Y below the threshold t.
DiscreteDistribution shortfall_law(const DiscreteDistribution& d, double t);

}  // namespace hrisk
