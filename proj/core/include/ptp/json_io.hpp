#pragma once

#include <string>

#include "ptp/potential.hpp"
#include "ptp/verify.hpp"

namespace ptp {

/// Canonical JSON for a Hamiltonian:
///   {"mass": r, "terms": [
///     {"kind": "shifted_power", "coef": [re, im], "shift": [re, im], "exp": k},
///     {"kind": "ix_power", "coef": g, "nu": v},
///     {"kind": "sech2" | "sec2", "coef": [re, im], "shift": [re, im]}]}
/// Terms declared mass-proportional carry "mass_dep": "m" | "inv_m".
/// parse -> serialize is byte-stable.
std::string hamiltonian_to_json(const Hamiltonian& h);
Hamiltonian hamiltonian_from_json(const std::string& text);

std::string pairing_report_to_json(const PairingReport& r);
std::string verification_report_to_json(const VerificationReport& r);
std::string ortho_report_to_json(const OrthoReport& r);
std::string znojil_report_to_json(const ZnojilReport& r);

}  // namespace ptp
