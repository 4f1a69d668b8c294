#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hrisk/distribution.hpp"
#include "hrisk/higher_order.hpp"

namespace hrisk::cli {

/// Command-line front end. Returns 0 on success, 1 on domain errors (bad
/// probabilities, levels out of range), 2 on I/O, usage, or parse errors.
/// Reports go to out, one-line diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// CSV table of the level sweep: header beta,value,t_star,derivative,f
/// with rows in ascending level order; f is the concave weighted value
/// (1 - beta) times the risk.
std::string emit_curve(const NormSpec& n, const DiscreteDistribution& d,
                       std::vector<double> betas);

}  // namespace hrisk::cli
