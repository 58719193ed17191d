#pragma once

#include <span>
#include <vector>

#include "ptp/discretize.hpp"

namespace ptp {

/// Lowest `count` eigenvalues of the symmetric tridiagonal matrix with the
/// given diagonal and constant off-diagonal, by Sturm-sequence bisection.
/// Each eigenvalue is bracketed to absolute width <= 1e-12 * max(1, |lambda|).
std::vector<double> eig_sym_tridiag(std::span<const double> diag, double off,
                                    int count);

/// All eigenvalues of a complex symmetric tridiagonal matrix by implicit
/// single-shift QR with complex-orthogonal rotations and deflation.
/// Sorted by real part (ties by imaginary part).
std::vector<Complex> qr_eigenvalues(std::vector<Complex> diag,
                                    std::vector<Complex> off);

/// The `count` eigenvalues of smallest real part of the discretized
/// operator.  Throws QRNoConvergenceError past 60*N total sweeps.
std::vector<Complex> eig_complex_tridiag(const TridiagOperator& op, int count);

/// Unit-norm (discrete L2, trapezoid weight h) eigenvector by shifted
/// inverse iteration; <= 50 iterations, residual <= 1e-8 required.
/// Throws InverseIterationStallError otherwise.
std::vector<Complex> eigenvector_inverse_iteration(const TridiagOperator& op,
                                                   Complex lambda);

}  // namespace ptp
