#pragma once

#include <vector>

namespace ptp {

enum class HoBranch { Standard, Negated };

/// Quasi-parity label q = +-1 of the regularized shifted oscillator.
struct QuasiParity {
  int q = +1;
};

/// +-omega(n + 1/2), n = 0..n_max.
std::vector<double> ho_levels(double omega, HoBranch branch, int n_max);

/// Regularized imaginary-shift oscillator levels: 2n+1 when |alpha| = 1/2,
/// else 4n + 2 + 2 q alpha.
std::vector<double> shifted_osc_levels(double alpha, QuasiParity q, int n_max);

/// Trigonometric well B/cos^2(x) on (-pi/2, pi/2), units 2m = 1:
/// E_n = (n + lambda)^2 with lambda = (1 + sqrt(1 + 4B))/2.
std::vector<double> trig_pt_levels(double B, int n_max);

}  // namespace ptp
