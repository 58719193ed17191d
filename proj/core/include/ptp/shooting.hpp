#pragma once

#include <span>

#include "ptp/contour.hpp"
#include "ptp/potential.hpp"
#include "ptp/spectrum.hpp"

namespace ptp {

/// Normalized Wronskian mismatch W(E) of the left- and right-integrated
/// solutions (fixed-step RK4, initial conditions psi=0, psi'=h at each
/// endpoint) met at the contour midpoint.  Zero exactly at an eigenvalue.
Complex shoot_residual(const Hamiltonian& h, const Contour& c, Complex E);

struct ShootOptions {
  double step_tol = 1e-10;    // |dE| <= step_tol * max(1, |E|)
  double merge_tol = 1e-8;    // duplicate roots merged within this
  int max_iterations = 80;    // secant iterations per seed
};

/// Complex secant iteration on W(E) from each seed, with deflation of
/// already-found roots.  Seeds typically come from the matrix method.
/// Throws SpectrumIncompleteError if fewer than `count` distinct roots
/// converge; per-seed failures are recorded, not fatal.
Spectrum shoot_find(const Hamiltonian& h, const Contour& c,
                    std::span<const Complex> seeds, int count,
                    const ShootOptions& opt = {});

}  // namespace ptp
