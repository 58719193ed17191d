#include "ptp/verify.hpp"

#include <algorithm>
#include <cmath>

#include "ptp/discretize.hpp"
#include "ptp/eig.hpp"
#include "ptp/shooting.hpp"
#include "ptp/transforms.hpp"

namespace ptp {

std::string to_string(PairingMode m) {
  switch (m) {
    case PairingMode::Direct: return "direct";
    case PairingMode::SignFlipped: return "sign_flipped";
    case PairingMode::ConstantShifted: return "constant_shifted";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Isospectral: return "isospectral";
    case Verdict::Partial: return "partial";
    case Verdict::Failed: return "failed";
  }
  return "?";
}

namespace {

std::vector<Complex> sorted_by_real(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

PairingReport pair_spectra(const Spectrum& a, const Spectrum& b, double tol,
                           PairingMode mode) {
  if (a.eigenvalues.empty() || b.eigenvalues.empty())
    throw Error("pair_spectra: empty spectrum");

  PairingReport rep;
  rep.mode = mode;
  rep.tol = tol;

  const std::vector<Complex> va = sorted_by_real(a.eigenvalues);
  std::vector<Complex> vb = b.eigenvalues;
  if (mode == PairingMode::SignFlipped)
    for (Complex& x : vb) x = -x;
  vb = sorted_by_real(vb);

  if (mode == PairingMode::ConstantShifted) {
    const std::size_t k = std::min<std::size_t>(
        4, std::min(va.size(), vb.size()));
    std::vector<double> dre, dim;
    for (std::size_t i = 0; i < k; ++i) {
      dre.push_back(va[i].real() - vb[i].real());
      dim.push_back(va[i].imag() - vb[i].imag());
    }
    rep.fitted_shift = Complex{median(dre), median(dim)};
    for (Complex& x : vb) x += rep.fitted_shift;
  }

  std::vector<bool> used(vb.size(), false);
  for (std::size_t i = 0; i < va.size(); ++i) {
    double best = -1.0;
    std::size_t jbest = 0;
    for (std::size_t j = 0; j < vb.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(va[i] - vb[j]);
      if (best < 0.0 || d < best) {
        best = d;
        jbest = j;
      }
    }
    if (best >= 0.0 && best <= tol) {
      used[jbest] = true;
      rep.pairs.push_back({static_cast<int>(i), static_cast<int>(jbest), best});
      rep.max_deviation = std::max(rep.max_deviation, best);
    } else {
      rep.unmatched_a.push_back(static_cast<int>(i));
    }
  }
  for (std::size_t j = 0; j < vb.size(); ++j)
    if (!used[j]) rep.unmatched_b.push_back(static_cast<int>(j));

  if (rep.unmatched_a.empty() && rep.unmatched_b.empty() &&
      rep.max_deviation <= tol) {
    rep.verdict = Verdict::Isospectral;
  } else if (!rep.pairs.empty()) {
    rep.verdict = Verdict::Partial;
  } else {
    rep.verdict = Verdict::Failed;
  }
  return rep;
}

OrthoReport ortho_check(const std::vector<std::vector<Complex>>& vectors,
                        const Contour& grid) {
  const std::size_t expect = grid.n_points - 2;
  for (const auto& v : vectors)
    if (v.size() != expect)
      throw GridMismatchError("ortho_check: vector length != interior grid");

  const std::size_t m = vectors.size();
  const double h = grid.step();
  OrthoReport rep;
  rep.gram_hermitian.assign(m, std::vector<Complex>(m, Complex{0, 0}));
  rep.gram_pt.assign(m, std::vector<Complex>(m, Complex{0, 0}));

  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t n = 0; n < m; ++n) {
      Complex gh{0, 0}, gp{0, 0};
      const auto& vk = vectors[k];
      const auto& vn = vectors[n];
      const std::size_t len = vk.size();
      for (std::size_t i = 0; i < len; ++i) {
        gh += std::conj(vk[i]) * vn[i];
        gp += std::conj(vk[i]) * vn[len - 1 - i];  // reflection x -> -x
      }
      rep.gram_hermitian[k][n] = gh * h;
      rep.gram_pt[k][n] = gp * h;
    }
  }

  const Complex I{0.0, 1.0};
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t n = 0; n < m; ++n) {
      const Complex id = k == n ? Complex{1, 0} : Complex{0, 0};
      const Complex idi = k == n ? I : Complex{0, 0};
      rep.dev_hermitian =
          std::max(rep.dev_hermitian, std::abs(rep.gram_hermitian[k][n] - id));
      rep.dev_pt_plus =
          std::max(rep.dev_pt_plus, std::abs(rep.gram_pt[k][n] - idi));
      rep.dev_pt_minus =
          std::max(rep.dev_pt_minus, std::abs(rep.gram_pt[k][n] + idi));
    }
  }
  return rep;
}

namespace {

// Lowest bound-state levels of a possibly negative-mass real-potential
// Hamiltonian.  With m < 0 the discretized operator is unbounded below at
// grid scale; the meaningful levels are those of the negated (bounded
// below) orientation, negated back.
Spectrum solve_real_hamiltonian(const Hamiltonian& h, const Contour& c,
                                int levels) {
  TridiagOperator op = discretize(h, c);
  std::vector<double> diag = op.real_diag();
  double off = op.off.real();
  const bool negated = h.mass < 0.0;
  if (negated) {
    for (double& d : diag) d = -d;
    off = -off;
  }
  std::vector<double> ev = eig_sym_tridiag(diag, off, levels);
  Spectrum s;
  for (double v : ev) s.eigenvalues.push_back({negated ? -v : v, 0.0});
  s.residuals.assign(ev.size(), 0.0);
  s.method = negated ? "sturm-negated" : "sturm";
  s.contour = c;
  s.sort();
  return s;
}

}  // namespace

VerificationReport verify_proposition(const Hamiltonian& h_pt,
                                      const Contour& contour_pt,
                                      const VerifyConfig& config) {
  VerificationReport rep;

  const auto grid = default_pt_grid();
  rep.pt_check = check_pt_symmetry(h_pt.potential, grid, config.pt_check_tol);
  if (!rep.pt_check.ok)
    throw NotPTSymmetricError("verify_proposition: input is not PT-symmetric");

  // Stage 1: PT-side solve, matrix method seeded into shooting.
  try {
    const TridiagOperator op = discretize(h_pt, contour_pt);
    const std::vector<Complex> seeds =
        eig_complex_tridiag(op, std::min<int>(config.levels + 2,
                                              static_cast<int>(op.dim())));
    try {
      rep.pt_spectrum = shoot_find(h_pt, contour_pt, seeds, config.levels);
    } catch (const Error&) {
      rep.failure_stage = "pt_shoot";
      rep.pt_spectrum.eigenvalues.assign(seeds.begin(),
                                         seeds.begin() + config.levels);
      rep.pt_spectrum.residuals.assign(config.levels, 0.0);
      rep.pt_spectrum.method = "fd";
      rep.pt_spectrum.contour = contour_pt;
      rep.pt_spectrum.sort();
    }
  } catch (const Error&) {
    rep.failure_stage = "pt_solve";
    rep.verdict = Verdict::Failed;
    return rep;
  }

  // Stage 2: partner construction.
  Hamiltonian partner;
  PartnerDiagnostics pd;
  try {
    std::tie(partner, pd) = hermitian_partner(h_pt, RotationSign::Minus);
    rep.partner_reality = pd.rotated_reality;
  } catch (const Error&) {
    rep.failure_stage = "partner_build";
    rep.verdict = Verdict::Failed;
    return rep;
  }

  // Stage 3: partner solve on the real line; half line right of a pole
  // when the partner potential is singular there.
  try {
    Contour pc = Contour::real_line(-config.partner_half_width,
                                    config.partner_half_width,
                                    config.partner_n_points);
    double pmax = -1e300;
    bool has_pole = false;
    for (double p : pd.real_axis_poles) {
      has_pole = true;
      pmax = std::max(pmax, p);
    }
    if (has_pole) {
      rep.half_line_restricted = true;
      rep.half_line_start = pmax + config.pole_offset;
      pc = Contour::real_line(rep.half_line_start,
                              rep.half_line_start +
                                  2.0 * config.partner_half_width,
                              config.partner_n_points);
    }
    rep.partner_spectrum = solve_real_hamiltonian(partner, pc, config.levels);
  } catch (const Error&) {
    rep.failure_stage = "partner_solve";
    rep.verdict = Verdict::Failed;
    return rep;
  }

  for (PairingMode mode : {PairingMode::Direct, PairingMode::SignFlipped,
                           PairingMode::ConstantShifted}) {
    rep.pairings.push_back(pair_spectra(rep.pt_spectrum, rep.partner_spectrum,
                                        config.pairing_tol, mode));
  }

  rep.verdict = Verdict::Failed;
  for (const auto& p : rep.pairings) {
    if (p.verdict == Verdict::Isospectral) rep.verdict = Verdict::Isospectral;
    if (p.verdict == Verdict::Partial && rep.verdict == Verdict::Failed)
      rep.verdict = Verdict::Partial;
  }
  return rep;
}

ZnojilReport znojil_duality(double m2, double f, const ZnojilConfig& config) {
  if (m2 <= 0.0) throw Error("znojil_duality: m2 must be > 0");
  if (f < 0.0) throw Error("znojil_duality: f must be >= 0");

  auto make = [&](double sign) {
    Hamiltonian h;
    h.mass = 0.5;  // kinetic term p^2
    h.potential.add(ShiftedPower{{sign * m2, 0.0}, {0.0, 0.0}, 2});
    h.potential.add(ShiftedPower{{0.0, f}, {0.0, 0.0}, 3});
    return h;
  };
  const Hamiltonian h_plus = make(+1.0);
  const Hamiltonian h_minus = make(-1.0);

  auto solve = [&](const Hamiltonian& h, double half_width) {
    const Contour c =
        Contour::real_line(-half_width, half_width, config.n_points);
    const TridiagOperator op = discretize(h, c);
    Spectrum s;
    s.eigenvalues = eig_complex_tridiag(op, config.levels);
    s.residuals.assign(config.levels, 0.0);
    s.method = "fd";
    s.contour = c;
    return s;
  };

  ZnojilReport rep;
  const Spectrum plus_a = solve(h_plus, config.box_half_width);
  const Spectrum minus_a = solve(h_minus, config.box_half_width);
  rep.plus_spectrum = solve(h_plus, config.box_half_width_alt);
  rep.minus_spectrum = solve(h_minus, config.box_half_width_alt);

  auto flags = [&](const Spectrum& a, const Spectrum& b) {
    std::vector<bool> out;
    for (int i = 0; i < config.levels; ++i) {
      out.push_back(std::abs(a.eigenvalues[i] - b.eigenvalues[i]) >
                    config.unreliable_tol);
    }
    return out;
  };
  rep.plus_unreliable = flags(plus_a, rep.plus_spectrum);
  rep.minus_unreliable = flags(minus_a, rep.minus_spectrum);

  // Cross-method check on the H+ side: shooting refinement from FD seeds.
  const Contour c_alt = Contour::real_line(-config.box_half_width_alt,
                                           config.box_half_width_alt,
                                           config.n_points);
  const Spectrum shot = shoot_find(h_plus, c_alt,
                                   rep.plus_spectrum.eigenvalues,
                                   config.levels);
  for (int i = 0; i < config.levels; ++i) {
    rep.plus_cross_method_dev =
        std::max(rep.plus_cross_method_dev,
                 std::abs(shot.eigenvalues[i] -
                          rep.plus_spectrum.eigenvalues[i]));
  }

  rep.pairing = pair_spectra(rep.plus_spectrum, rep.minus_spectrum,
                             config.pairing_tol, PairingMode::ConstantShifted);
  return rep;
}

}  // namespace ptp
