#include "ptp/discretize.hpp"

#include <cmath>
#include <sstream>

namespace ptp {

bool TridiagOperator::is_real(double tol) const {
  if (std::abs(off.imag()) > tol) return false;
  for (const Complex& d : diag)
    if (std::abs(d.imag()) > tol) return false;
  return true;
}

std::vector<double> TridiagOperator::real_diag() const {
  std::vector<double> out;
  out.reserve(diag.size());
  for (const Complex& d : diag) out.push_back(d.real());
  return out;
}

TridiagOperator discretize(const Hamiltonian& h, const Contour& c) {
  if (c.n_points < 16)
    throw ContourTooCoarseError("discretize: n_points < 16");
  if (h.mass == 0.0) throw Error("discretize: mass must be nonzero");

  const auto poles = h.potential.poles();
  const double hh = c.step();
  const double hbar2 = Hamiltonian::hbar * Hamiltonian::hbar;

  TridiagOperator op;
  op.contour = c;
  op.mass = h.mass;
  op.off = Complex{-hbar2 / (2.0 * h.mass * hh * hh), 0.0};
  op.diag.reserve(c.n_points - 2);
  for (int k = 1; k < c.n_points - 1; ++k) {
    const Complex z = c.point(k);
    for (Complex p : poles) {
      if (std::abs(z - p) < 1e-9) {
        std::ostringstream os;
        os << "potential pole at (" << p.real() << ", " << p.imag()
           << ") within 1e-9 of contour sample " << k;
        throw PoleOnContourError(os.str());
      }
    }
    op.diag.push_back(hbar2 / (h.mass * hh * hh) + h.potential.eval(z));
  }
  return op;
}

}  // namespace ptp
