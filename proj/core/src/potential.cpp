#include "ptp/potential.hpp"

#include <cmath>
#include <sstream>

namespace ptp {

namespace {

// Integer power by repeated squaring; negative exponents invert.
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

bool finite(Complex v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

[[noreturn]] void throw_pole(Complex z, Complex pole) {
  std::ostringstream os;
  os << "evaluation point (" << z.real() << ", " << z.imag()
     << ") within pole tolerance of (" << pole.real() << ", " << pole.imag()
     << ")";
  throw PoleProximityError(os.str());
}

}  // namespace

Complex eval_term(const PotentialTerm& term, Complex z) {
  return std::visit(
      [&](const auto& t) -> Complex {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ShiftedPower>) {
          const Complex d = z - t.shift;
          if (t.exponent < 0 && std::abs(d) < kPoleTolerance)
            throw_pole(z, t.shift);
          return t.coef * ipow(d, t.exponent);
        } else if constexpr (std::is_same_v<T, IXPower>) {
          const Complex arg = Complex{0.0, 1.0} * z;
          const double n = t.nu;
          const bool integral = n == std::floor(n);
          const Complex p = integral ? ipow(arg, static_cast<int>(n))
                                     : std::pow(arg, n);
          return -t.coef * p;
        } else if constexpr (std::is_same_v<T, SechSquared>) {
          const Complex c = std::cosh(z - t.shift);
          if (std::abs(c) < kPoleTolerance) throw_pole(z, t.shift);
          return t.coef / (c * c);
        } else {
          static_assert(std::is_same_v<T, SecSquared>);
          const Complex c = std::cos(z - t.shift);
          if (std::abs(c) < kPoleTolerance) throw_pole(z, t.shift);
          return t.coef / (c * c);
        }
      },
      term);
}

std::vector<Complex> PotentialExpr::poles() const {
  std::vector<Complex> out;
  for (const auto& term : terms_) {
    if (const auto* sp = std::get_if<ShiftedPower>(&term);
        sp && sp->exponent < 0) {
      out.push_back(sp->shift);
    }
  }
  return out;
}

Complex PotentialExpr::eval(Complex z) const {
  Complex sum{0.0, 0.0};
  for (const auto& term : terms_) {
    const Complex v = eval_term(term, z);
    if (!finite(v)) throw NonFiniteError("potential term overflowed");
    sum += v;
  }
  if (!finite(sum)) throw NonFiniteError("potential sum overflowed");
  return sum;
}

SymmetryCheck check_pt_symmetry(const PotentialExpr& expr,
                                std::span<const double> grid, double tol) {
  double max_dev = 0.0;
  for (double x : grid) {
    const Complex dev = expr.eval({x, 0.0}) - std::conj(expr.eval({-x, 0.0}));
    max_dev = std::max(max_dev, std::abs(dev));
  }
  return {max_dev <= tol, max_dev};
}

SymmetryCheck check_real_on_axis(const PotentialExpr& expr,
                                 std::span<const double> grid, double tol) {
  double max_dev = 0.0;
  for (double y : grid)
    max_dev = std::max(max_dev, std::abs(expr.eval({y, 0.0}).imag()));
  return {max_dev <= tol, max_dev};
}

}  // namespace ptp
