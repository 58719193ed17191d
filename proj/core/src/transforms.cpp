#include "ptp/transforms.hpp"

#include <cmath>
#include <sstream>

namespace ptp {

namespace {

Complex unit(RotationSign sign) {
  return sign == RotationSign::Plus ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
}

Complex ipow(Complex base, int k) {
  if (k < 0) return 1.0 / ipow(base, -k);
  Complex acc{1.0, 0.0};
  Complex b = base;
  unsigned e = static_cast<unsigned>(k);
  while (e != 0) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

bool integral(double v) { return v == std::floor(v); }

Complex flipped_coef(Complex coef, MassDependence dep) {
  return dep == MassDependence::Independent ? coef : -coef;
}

}  // namespace

PotentialTerm rotate_term(const PotentialTerm& term, RotationSign sign) {
  const Complex si = unit(sign);
  return std::visit(
      [&](const auto& t) -> PotentialTerm {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ShiftedPower>) {
          // c (x-a)^k at x = si y  equals  c (si)^k (y - (-si a))^k.
          return ShiftedPower{t.coef * ipow(si, t.exponent), -si * t.shift,
                              t.exponent, t.mass_dep};
        } else if constexpr (std::is_same_v<T, IXPower>) {
          if (!integral(t.nu)) {
            std::ostringstream os;
            os << "rotation of (ix)^nu with non-integer nu = " << t.nu
               << " leaves the closed term algebra; composite phase exp("
               << (sign == RotationSign::Plus ? "+" : "-")
               << "i pi nu) on the principal branch";
            throw BranchAmbiguityError(os.str());
          }
          const int k = static_cast<int>(t.nu);
          // -g (i x)^nu at x = si y:  i*(-i y) = y,  i*(i y) = -y.
          const double phase =
              sign == RotationSign::Minus ? 1.0 : (k % 2 == 0 ? 1.0 : -1.0);
          return ShiftedPower{Complex{-t.coef * phase, 0.0}, Complex{0.0, 0.0},
                              k, t.mass_dep};
        } else if constexpr (std::is_same_v<T, SechSquared>) {
          // sech(si (y - a/si)) = sec(y + si^2 a / si) via cos(i u)=cosh(u).
          return SecSquared{t.coef, -si * t.shift, t.mass_dep};
        } else {
          static_assert(std::is_same_v<T, SecSquared>);
          return SechSquared{t.coef, -si * t.shift, t.mass_dep};
        }
      },
      term);
}

PotentialExpr rotate_potential(const PotentialExpr& expr, RotationSign sign) {
  std::vector<PotentialTerm> out;
  out.reserve(expr.size());
  for (const auto& t : expr.terms()) out.push_back(rotate_term(t, sign));
  return PotentialExpr{std::move(out)};
}

std::vector<Complex> eta_series(std::span<const Complex> coeffs, double beta) {
  std::vector<Complex> out;
  out.reserve(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    out.push_back(coeffs[n] *
                  std::exp(Complex{0.0, -beta * static_cast<double>(n)}));
  }
  return out;
}

Hamiltonian mass_flip(const Hamiltonian& h) {
  Hamiltonian out;
  out.mass = -h.mass;
  std::vector<PotentialTerm> terms;
  terms.reserve(h.potential.size());
  for (const auto& term : h.potential.terms()) {
    terms.push_back(std::visit(
        [](auto t) -> PotentialTerm {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, IXPower>) {
            if (t.mass_dep != MassDependence::Independent) t.coef = -t.coef;
          } else {
            t.coef = flipped_coef(t.coef, t.mass_dep);
          }
          return t;
        },
        term));
  }
  out.potential = PotentialExpr{std::move(terms)};
  return out;
}

PotentialExpr coupling_flip(const PotentialExpr& expr,
                            std::size_t term_index) {
  if (term_index >= expr.size())
    throw IndexOutOfRangeError("coupling_flip: term index out of range");
  auto terms = expr.terms();
  terms[term_index] = std::visit(
      [](auto t) -> PotentialTerm {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, IXPower>) {
          t.coef = -t.coef;
        } else {
          t.coef = -t.coef;
        }
        return t;
      },
      terms[term_index]);
  return PotentialExpr{std::move(terms)};
}

std::vector<double> default_pt_grid() {
  // Symmetric, dodges integer and half-pi pole locations.
  std::vector<double> grid;
  for (int j = 1; j <= 40; ++j) {
    const double x = 0.171 * j;
    grid.push_back(x);
    grid.push_back(-x);
  }
  return grid;
}

std::pair<Hamiltonian, PartnerDiagnostics> hermitian_partner(
    const Hamiltonian& h, RotationSign sign) {
  const auto grid = default_pt_grid();
  const auto pt = check_pt_symmetry(h.potential, grid, 1e-9);
  if (!pt.ok) {
    std::ostringstream os;
    os << "input potential is not PT-symmetric (max deviation "
       << pt.max_deviation << ")";
    throw NotPTSymmetricError(os.str());
  }

  const PotentialExpr rotated = rotate_potential(h.potential, sign);

  PartnerDiagnostics diag;
  for (Complex p : rotated.poles())
    if (std::abs(p.imag()) < 1e-9) diag.real_axis_poles.push_back(p.real());

  // Reality grid avoids real-axis poles of the rotated potential.
  std::vector<double> reality_grid;
  for (double x : grid) {
    bool near_pole = false;
    for (double p : diag.real_axis_poles)
      if (std::abs(x - p) < 1e-3) near_pole = true;
    if (!near_pole) reality_grid.push_back(x);
  }
  diag.rotated_reality = check_real_on_axis(rotated, reality_grid, 1e-9);
  if (!diag.rotated_reality.ok) {
    std::ostringstream os;
    os << "rotated potential is not real on the axis (max |Im| "
       << diag.rotated_reality.max_deviation << ")";
    throw RotatedNotRealError(os.str());
  }

  // The rotation factors (±i)^k already re-express each mass-proportional
  // coefficient in terms of the flipped mass, so the flip step here negates
  // only the kinetic term; the rotated potential is kept as-is.
  Hamiltonian partner;
  partner.mass = -h.mass;
  partner.potential = rotated;
  return {partner, diag};
}

}  // namespace ptp
