#pragma once

#include <string>

#include "hrisk/distribution.hpp"
#include "hrisk/higher_order.hpp"
#include "hrisk/spectral.hpp"

namespace hrisk {

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

/// Strict real-number parse; the whole string must be consumed.
double parse_real(const std::string& text);

/// Distribution from JSON {"atoms":[{"x": ..., "p": ...}, ...]} or CSV
/// with header value,probability; the format is sniffed from the first
/// non-space byte. as_weights renormalizes the probability column instead
/// of requiring it to sum to 1 within 1e-9.
DiscreteDistribution parse_distribution(const std::string& text,
                                        bool as_weights = false);

/// Mixture from JSON {"kusuoka":[{"alpha": ..., "w": ...}, ...]}.
KusuokaMixture parse_mixture(const std::string& text);

/// Norm selector: lp:<p> | avar:<alpha> | spectral:<path> |
/// expectile:<alpha>. The spectral form reads the mixture file at <path>.
NormSpec parse_norm_spec(const std::string& spec);

/// Fixed significant-digit rendering. Integral values keep a trailing
/// ".0" so real-valued output stays visibly real. 17 digits round-trip.
std::string format_number(double v, int digits = 12);

}  // namespace hrisk
