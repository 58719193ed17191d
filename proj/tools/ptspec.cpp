// ptspec: construct PT-symmetric Hamiltonians, derive Hermitian partners,
// compute spectra by independent methods, and emit verification reports.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ptp/ptp.hpp"

namespace {

namespace fs = std::filesystem;
using namespace ptp;

constexpr int kExitOk = 0;
constexpr int kExitStrictFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNoConvergence = 3;

// Outputs are written via a temp file + rename so an interrupted run never
// leaves a truncated file at the target path.
void atomic_write(const std::string& path, const std::string& content) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot open output file: " + tmp.string());
    os << content;
    if (!os) throw Error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw SchemaError("cannot open input file: " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

Contour parse_contour(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  try {
    if (parts.size() == 4 && parts[0] == "real") {
      return Contour::real_line(std::stod(parts[1]), std::stod(parts[2]),
                                std::stoi(parts[3]));
    }
    if (parts.size() == 5 && parts[0] == "shifted") {
      return Contour::shifted_line(std::stod(parts[1]), std::stod(parts[2]),
                                   std::stod(parts[3]),
                                   std::stoi(parts[4]));
    }
  } catch (const std::exception&) {
    // fall through to the schema error below
  }
  throw SchemaError(
      "bad contour spec (expected real:<xmin>:<xmax>:<N> or "
      "shifted:<xmin>:<xmax>:<c>:<N>): " +
      text);
}

PotentialExpr apply_map(const Hamiltonian& h, const std::string& map,
                        Hamiltonian& out) {
  out = h;
  if (map == "rotate-minus") {
    out.potential = rotate_potential(h.potential, RotationSign::Minus);
  } else if (map == "rotate-plus") {
    out.potential = rotate_potential(h.potential, RotationSign::Plus);
  } else if (map == "mass-flip") {
    out = mass_flip(h);
  } else if (map.rfind("coupling-flip:", 0) == 0) {
    const int idx = std::stoi(map.substr(14));
    if (idx < 0) throw SchemaError("coupling-flip index must be >= 0");
    out.potential = coupling_flip(h.potential, static_cast<std::size_t>(idx));
  } else if (map.rfind("eta:", 0) == 0) {
    // eta rescales power-series coefficients; only shift-0 integer powers
    // qualify.
    const double beta = std::stod(map.substr(4));
    if (!std::isfinite(beta)) throw SchemaError("eta beta must be finite");
    std::vector<Complex> coeffs;
    for (const auto& t : h.potential.terms()) {
      const auto* sp = std::get_if<ShiftedPower>(&t);
      if (!sp || sp->shift != Complex{0.0, 0.0} || sp->exponent < 0)
        throw SchemaError(
            "eta map requires a polynomial potential (shift-0 powers)");
      if (coeffs.size() <= static_cast<std::size_t>(sp->exponent))
        coeffs.resize(sp->exponent + 1, Complex{0, 0});
      coeffs[sp->exponent] += sp->coef;
    }
    const auto mapped = eta_series(coeffs, beta);
    PotentialExpr e;
    for (std::size_t n = 0; n < mapped.size(); ++n) {
      if (mapped[n] != Complex{0.0, 0.0})
        e.add(ShiftedPower{mapped[n], {0.0, 0.0}, static_cast<int>(n)});
    }
    out.potential = e;
  } else {
    throw SchemaError("unknown transform map: " + map);
  }
  return out.potential;
}

// Recognize the closed-form families for `spectrum --method exact`.
std::vector<double> exact_levels(const Hamiltonian& h, int levels) {
  const auto& terms = h.potential.terms();
  const double two_m = 2.0 * h.mass;

  // Single sec^2 term: trigonometric well.
  if (terms.size() == 1) {
    if (const auto* sec = std::get_if<SecSquared>(&terms[0])) {
      if (std::abs(sec->coef.imag()) < 1e-14 && sec->coef.real() >= 0.0)
        return trig_pt_levels(sec->coef.real() * two_m, levels - 1);
    }
  }

  const ShiftedPower* quad = nullptr;
  const ShiftedPower* core = nullptr;
  for (const auto& t : terms) {
    const auto* sp = std::get_if<ShiftedPower>(&t);
    if (!sp) return {};
    if (sp->exponent == 2 && !quad) {
      quad = sp;
    } else if (sp->exponent == -2 && !core) {
      core = sp;
    } else {
      return {};
    }
  }
  if (!quad || std::abs(quad->coef.imag()) > 1e-14) return {};
  const double c2 = quad->coef.real();
  if (c2 == 0.0) return {};

  if (!core) {
    // (m omega^2 / 2) x^2: ladder spectrum +-omega(n + 1/2).
    const double omega = std::sqrt(std::abs(2.0 * c2 / h.mass));
    const bool negated = c2 / h.mass < 0.0;
    return ho_levels(omega, negated ? HoBranch::Negated : HoBranch::Standard,
                     levels - 1);
  }
  if (core->shift != quad->shift) return {};
  // Regularized shifted oscillator: core coefficient (alpha^2 - 1/4)/(2m).
  const double g = core->coef.real() * two_m;
  if (g < -0.25) return {};
  const double alpha = std::sqrt(g + 0.25);
  auto plus = shifted_osc_levels(alpha, {+1}, levels - 1);
  auto minus = shifted_osc_levels(alpha, {-1}, levels - 1);
  plus.insert(plus.end(), minus.begin(), minus.end());
  std::sort(plus.begin(), plus.end());
  plus.erase(std::unique(plus.begin(), plus.end()), plus.end());
  plus.resize(std::min<std::size_t>(plus.size(), levels));
  return plus;
}

Spectrum compute_spectrum(const Hamiltonian& h, const Contour& c,
                          const std::string& method, int levels) {
  if (method == "exact") {
    const auto ev = exact_levels(h, levels);
    if (ev.empty())
      throw SchemaError("no closed-form spectrum for this potential family");
    Spectrum s;
    for (double v : ev) s.eigenvalues.push_back({v, 0.0});
    s.residuals.assign(ev.size(), 0.0);
    s.method = "exact";
    s.contour = c;
    return s;
  }
  const TridiagOperator op = discretize(h, c);
  if (method == "fd") {
    Spectrum s;
    s.eigenvalues = eig_complex_tridiag(op, levels);
    s.residuals.assign(levels, 0.0);
    s.method = "fd";
    s.contour = c;
    return s;
  }
  if (method == "shoot") {
    const auto seeds = eig_complex_tridiag(
        op, std::min<int>(levels + 2, static_cast<int>(op.dim())));
    return shoot_find(h, c, seeds, levels);
  }
  throw SchemaError("unknown method: " + method);
}

int mapped_exit(const Error& e) {
  if (dynamic_cast<const QRNoConvergenceError*>(&e) ||
      dynamic_cast<const SpectrumIncompleteError*>(&e) ||
      dynamic_cast<const InverseIterationStallError*>(&e) ||
      dynamic_cast<const OverflowError*>(&e)) {
    return kExitNoConvergence;
  }
  return kExitBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PT-symmetric / Hermitian partner spectral toolkit"};
  app.require_subcommand(1);

  std::string in_path, out_path, map_name, method = "fd";
  std::string contour_spec = "real:-12:12:4000";
  int levels = 4;
  double tol = 1e-3;
  bool strict = false;

  auto* cmd_transform = app.add_subcommand("transform", "Apply a transform");
  cmd_transform->add_option("--in", in_path)->required();
  cmd_transform->add_option("--map", map_name)->required();
  cmd_transform->add_option("--out", out_path)->required();

  auto* cmd_spectrum = app.add_subcommand("spectrum", "Compute a spectrum");
  cmd_spectrum->add_option("--in", in_path)->required();
  cmd_spectrum->add_option("--method", method)
      ->check(CLI::IsMember({"fd", "shoot", "exact"}));
  cmd_spectrum->add_option("--contour", contour_spec);
  cmd_spectrum->add_option("--levels", levels);
  cmd_spectrum->add_option("--out", out_path)->required();

  auto* cmd_verify = app.add_subcommand("verify", "Verify partner pipeline");
  cmd_verify->add_option("--pt", in_path)->required();
  cmd_verify->add_option("--contour", contour_spec);
  cmd_verify->add_option("--tol", tol);
  cmd_verify->add_option("--levels", levels);
  cmd_verify->add_flag("--strict", strict);
  cmd_verify->add_option("--out", out_path)->required();

  auto* cmd_ortho = app.add_subcommand("ortho", "Orthonormalization report");
  cmd_ortho->add_option("--in", in_path)->required();
  cmd_ortho->add_option("--contour", contour_spec);
  cmd_ortho->add_option("--levels", levels);
  cmd_ortho->add_option("--out", out_path)->required();

  auto* cmd_exp = app.add_subcommand("experiment", "Named experiments");
  cmd_exp->require_subcommand(1);
  double m2 = 1.0, f = 0.1;
  auto* cmd_znojil = cmd_exp->add_subcommand("znojil", "Mass-sign duality");
  cmd_znojil->add_option("--m2", m2);
  cmd_znojil->add_option("--f", f);
  cmd_znojil->add_option("--out", out_path)->required();

  std::string svg_path;
  auto* cmd_conv = cmd_exp->add_subcommand("convergence", "Grid refinement");
  cmd_conv->add_option("--in", in_path)->required();
  cmd_conv->add_option("--contour", contour_spec);
  cmd_conv->add_option("--levels", levels);
  cmd_conv->add_option("--svg", svg_path);
  cmd_conv->add_option("--out", out_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_transform->parsed()) {
      const Hamiltonian h = hamiltonian_from_json(read_file(in_path));
      Hamiltonian out;
      apply_map(h, map_name, out);
      atomic_write(out_path, hamiltonian_to_json(out));
      return kExitOk;
    }
    if (cmd_spectrum->parsed()) {
      const Hamiltonian h = hamiltonian_from_json(read_file(in_path));
      const Contour c = parse_contour(contour_spec);
      const Spectrum s = compute_spectrum(h, c, method, levels);
      atomic_write(out_path, spectrum_to_csv(s));
      return kExitOk;
    }
    if (cmd_verify->parsed()) {
      const Hamiltonian h = hamiltonian_from_json(read_file(in_path));
      const Contour c = parse_contour(contour_spec);
      VerifyConfig cfg;
      cfg.pairing_tol = tol;
      cfg.levels = levels;
      const VerificationReport rep = verify_proposition(h, c, cfg);
      atomic_write(out_path, verification_report_to_json(rep));
      if (strict && rep.verdict == Verdict::Failed) return kExitStrictFailed;
      return kExitOk;
    }
    if (cmd_ortho->parsed()) {
      const Hamiltonian h = hamiltonian_from_json(read_file(in_path));
      const Contour c = parse_contour(contour_spec);
      const TridiagOperator op = discretize(h, c);
      const auto ev = eig_complex_tridiag(op, levels);
      std::vector<std::vector<Complex>> vectors;
      for (Complex lambda : ev)
        vectors.push_back(eigenvector_inverse_iteration(op, lambda));
      atomic_write(out_path, ortho_report_to_json(ortho_check(vectors, c)));
      return kExitOk;
    }
    if (cmd_znojil->parsed()) {
      const ZnojilReport rep = znojil_duality(m2, f);
      atomic_write(out_path, znojil_report_to_json(rep));
      return kExitOk;
    }
    if (cmd_conv->parsed()) {
      const Hamiltonian h = hamiltonian_from_json(read_file(in_path));
      const Contour c = parse_contour(contour_spec);
      const std::vector<int> n_list{500, 1000, 2000, 4000};
      const ConvergenceResult res =
          convergence_study(h, c, n_list, levels - 1);
      std::ostringstream os;
      os.precision(17);
      os << "n_points,h,lambda,error,order\n";
      for (const auto& p : res.table) {
        os << p.n_points << ',' << p.h << ',' << p.lambda << ',' << p.error
           << ',' << res.order << '\n';
      }
      atomic_write(out_path, os.str());
      if (!svg_path.empty())
        atomic_write(svg_path, emit_svg_convergence(res));
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "ptspec: " << e.what() << '\n';
    return mapped_exit(e);
  } catch (const std::exception& e) {
    std::cerr << "ptspec: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
