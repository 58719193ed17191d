#pragma once

#include <complex>
#include <span>
#include <variant>
#include <vector>

#include "ptp/errors.hpp"

namespace ptp {

using Complex = std::complex<double>;

/// Declared dependence of a term's coefficient on the signed mass.
/// Flipping the mass sign negates coefficients declared Mass or InverseMass.
enum class MassDependence { Independent, Mass, InverseMass };

/// coef * (z - shift)^exponent.  Negative exponents declare a pole at
/// z = shift.
struct ShiftedPower {
  Complex coef;
  Complex shift;
  int exponent = 0;
  MassDependence mass_dep = MassDependence::Independent;
};

/// -coef * (i z)^nu, principal branch for non-integer nu.
struct IXPower {
  double coef = 0.0;
  double nu = 2.0;
  MassDependence mass_dep = MassDependence::Independent;
};

/// coef * sech^2(z - shift)
struct SechSquared {
  Complex coef;
  Complex shift;
  MassDependence mass_dep = MassDependence::Independent;
};

/// coef * sec^2(z - shift)
struct SecSquared {
  Complex coef;
  Complex shift;
  MassDependence mass_dep = MassDependence::Independent;
};

using PotentialTerm =
    std::variant<ShiftedPower, IXPower, SechSquared, SecSquared>;

/// Minimum admissible distance between an evaluation point and a pole.
inline constexpr double kPoleTolerance = 1e-12;

Complex eval_term(const PotentialTerm& term, Complex z);

/// Sum of terms; the empty expression is the zero potential.
class PotentialExpr {
 public:
  PotentialExpr() = default;
  explicit PotentialExpr(std::vector<PotentialTerm> terms)
      : terms_(std::move(terms)) {}

  const std::vector<PotentialTerm>& terms() const { return terms_; }
  std::vector<PotentialTerm>& terms() { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(PotentialTerm t) { terms_.push_back(std::move(t)); }

  /// Declared pole locations (shifts of negative-exponent power terms).
  std::vector<Complex> poles() const;

  /// Throws PoleProximityError within kPoleTolerance of a pole,
  /// NonFiniteError on overflow.
  Complex eval(Complex z) const;

 private:
  std::vector<PotentialTerm> terms_;
};

struct SymmetryCheck {
  bool ok = false;
  double max_deviation = 0.0;
};

/// max over the grid of |V(x) - conj(V(-x))| against tol.  The grid must be
/// symmetric about 0.
SymmetryCheck check_pt_symmetry(const PotentialExpr& expr,
                                std::span<const double> grid, double tol);

/// max over the grid of |Im V(y)| against tol.
SymmetryCheck check_real_on_axis(const PotentialExpr& expr,
                                 std::span<const double> grid, double tol);

/// Hamiltonian H = p^2/(2 mass) + V, hbar fixed to 1.  The canonical mass
/// for oscillator-family comparisons is 1/2, so the kinetic term is p^2.
struct Hamiltonian {
  double mass = 0.5;
  PotentialExpr potential;

  static constexpr double hbar = 1.0;
};

}  // namespace ptp
