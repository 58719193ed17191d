#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ptp/potential.hpp"

namespace ptp {

/// Direction of the imaginary rotation x -> sign * i * y.
enum class RotationSign { Plus, Minus };

/// Closed term-by-term substitution x -> sign*i*y.  Exact; no sampling.
/// Throws BranchAmbiguityError for IXPower terms with non-integer nu
/// (the composite phase is reported in the message, never chosen silently).
PotentialExpr rotate_potential(const PotentialExpr& expr, RotationSign sign);
PotentialTerm rotate_term(const PotentialTerm& term, RotationSign sign);

/// Power-series argument rescaling by exp(-i beta): A_n -> A_n e^{-i beta n}.
std::vector<Complex> eta_series(std::span<const Complex> coeffs, double beta);

/// Negates the mass and rewrites coefficients declared mass-proportional
/// (or inverse-mass-proportional).  Involution.
Hamiltonian mass_flip(const Hamiltonian& h);

/// Negates the coefficient of the indexed term.
PotentialExpr coupling_flip(const PotentialExpr& expr, std::size_t term_index);

struct PartnerDiagnostics {
  SymmetryCheck rotated_reality;
  /// Poles of the partner potential lying on the real axis (|Im| < 1e-9).
  std::vector<double> real_axis_poles;
};

/// Rotation followed by mass flip.  Requires a PT-symmetric input; the
/// rotated potential must be real on the axis (RotatedNotRealError
/// otherwise, tol 1e-9).
std::pair<Hamiltonian, PartnerDiagnostics> hermitian_partner(
    const Hamiltonian& h, RotationSign sign);

/// Default symmetric grid used for the PT precondition check.
std::vector<double> default_pt_grid();

}  // namespace ptp
