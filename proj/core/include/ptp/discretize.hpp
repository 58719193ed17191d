#pragma once

#include <vector>

#include "ptp/contour.hpp"
#include "ptp/potential.hpp"

namespace ptp {

/// Three-point Dirichlet finite-difference operator on the interior points
/// of a contour: diag_k = hbar^2/(m h^2) + V(z_k), constant off-diagonal
/// -hbar^2/(2 m h^2).  Complex symmetric.
struct TridiagOperator {
  std::vector<Complex> diag;  // interior points, length n_points - 2
  Complex off;
  Contour contour;
  double mass = 0.5;

  std::size_t dim() const { return diag.size(); }

  /// True when every diagonal entry (and the off-diagonal) is real to tol.
  bool is_real(double tol = 1e-13) const;

  std::vector<double> real_diag() const;
};

/// Throws PoleOnContourError if a potential pole lies within 1e-9 of an
/// interior sample; ContourTooCoarseError below 16 points.
TridiagOperator discretize(const Hamiltonian& h, const Contour& c);

}  // namespace ptp
