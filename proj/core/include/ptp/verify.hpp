#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptp/contour.hpp"
#include "ptp/potential.hpp"
#include "ptp/spectrum.hpp"

namespace ptp {

enum class PairingMode { Direct, SignFlipped, ConstantShifted };
enum class Verdict { Isospectral, Partial, Failed };

std::string to_string(PairingMode m);
std::string to_string(Verdict v);

struct Pair {
  int index_a = 0;
  int index_b = 0;
  double deviation = 0.0;
};

/// One-to-one pairing of two spectra under identity / negation / fitted
/// constant shift, with leftovers recorded.
struct PairingReport {
  PairingMode mode = PairingMode::Direct;
  std::vector<Pair> pairs;
  std::vector<int> unmatched_a;
  std::vector<int> unmatched_b;
  double max_deviation = 0.0;
  Complex fitted_shift{0.0, 0.0};  // ConstantShifted mode only
  double tol = 0.0;
  Verdict verdict = Verdict::Failed;
};

/// Greedy nearest-neighbor matching in ascending real part.  In
/// ConstantShifted mode the shift is first fitted as the median of
/// lambda_A - lambda_B over the lowest min(4, len) levels.
PairingReport pair_spectra(const Spectrum& a, const Spectrum& b, double tol,
                           PairingMode mode);

/// Gram matrices of an eigenvector set: the standard L2 inner product
/// against the identity, and the parity-reflected product against +-i I.
struct OrthoReport {
  std::vector<std::vector<Complex>> gram_hermitian;
  std::vector<std::vector<Complex>> gram_pt;
  double dev_hermitian = 0.0;  // max |G - I|
  double dev_pt_plus = 0.0;    // max |G - iI|
  double dev_pt_minus = 0.0;   // max |G + iI|
};

/// Trapezoid-rule Gram matrices; the reflection x -> -x is index reversal,
/// so the grid must be symmetric about its midpoint.
OrthoReport ortho_check(const std::vector<std::vector<Complex>>& vectors,
                        const Contour& grid);

struct VerifyConfig {
  double pairing_tol = 1e-3;
  double pt_check_tol = 1e-9;
  int levels = 4;
  /// Half-width and resolution of the partner's real-line solve.
  double partner_half_width = 12.0;
  int partner_n_points = 4000;
  /// Dirichlet offset from a real-axis pole when restricting to a half line.
  double pole_offset = 1e-6;
};

/// Full proposition pipeline: solve the PT side, build the Hermitian
/// partner, solve it on the real line (half line right of a pole when the
/// partner is singular there), and report pairings in all three modes.
struct VerificationReport {
  Spectrum pt_spectrum;
  Spectrum partner_spectrum;
  std::vector<PairingReport> pairings;  // direct, sign_flipped, shifted
  SymmetryCheck pt_check;
  SymmetryCheck partner_reality;
  bool half_line_restricted = false;
  double half_line_start = 0.0;
  std::string failure_stage;  // empty on full success
  Verdict verdict = Verdict::Failed;  // best verdict across modes
};

VerificationReport verify_proposition(const Hamiltonian& h_pt,
                                      const Contour& contour_pt,
                                      const VerifyConfig& config = {});

/// Mass-sign duality experiment: H+- = p^2 +- m^2 x^2 + i f x^3 solved on
/// the real line over two box sizes; levels moving more than shift_tol
/// between boxes are flagged unreliable.
struct ZnojilConfig {
  double box_half_width = 10.0;
  double box_half_width_alt = 12.0;
  int n_points = 6000;
  int levels = 4;
  double unreliable_tol = 1e-3;
  double pairing_tol = 1e-2;
};

struct ZnojilReport {
  Spectrum plus_spectrum;   // H+ on the larger box
  Spectrum minus_spectrum;  // H- on the larger box
  std::vector<bool> plus_unreliable;
  std::vector<bool> minus_unreliable;
  PairingReport pairing;  // constant_shifted H+ vs H-
  double plus_cross_method_dev = 0.0;  // QR vs shooting on H+ levels
};

ZnojilReport znojil_duality(double m2, double f, const ZnojilConfig& config = {});

}  // namespace ptp
