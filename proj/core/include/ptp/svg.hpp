#pragma once

#include <string>

#include "ptp/convergence.hpp"

namespace ptp {

/// Deterministic log-log SVG plot of error vs step size with a slope
/// annotation.  Throws TooFewPointsError below 2 usable points.
std::string emit_svg_convergence(const ConvergenceResult& data);

}  // namespace ptp
