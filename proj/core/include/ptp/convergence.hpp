#pragma once

#include <span>
#include <vector>

#include "ptp/contour.hpp"
#include "ptp/potential.hpp"

namespace ptp {

struct ConvergencePoint {
  int n_points = 0;
  double h = 0.0;
  double lambda = 0.0;
  double error = 0.0;  // |lambda_N - lambda_ref|
};

struct ConvergenceResult {
  double order = 0.0;  // NaN when degenerate
  bool degenerate = false;
  double lambda_ref = 0.0;  // Richardson extrapolation of the two finest grids
  std::vector<ConvergencePoint> table;
};

/// Solves `level` on each grid size of the contour template, Richardson-
/// extrapolates a reference from the two finest grids and fits the observed
/// order p of |lambda_N - lambda_ref| against h.
ConvergenceResult convergence_study(const Hamiltonian& h, const Contour& c,
                                    std::span<const int> n_list, int level);

}  // namespace ptp
