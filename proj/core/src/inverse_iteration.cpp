#include <cmath>
#include <random>

#include "ptp/eig.hpp"
#include "tridiag_solve.hpp"

namespace ptp {

using detail::tridiag_shifted_solve;

std::vector<Complex> eigenvector_inverse_iteration(const TridiagOperator& op,
                                                   Complex lambda) {
  const std::size_t n = op.dim();
  const double h = op.contour.step();

  std::mt19937 rng(12345);  // fixed seed: deterministic output
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<Complex> v(n);
  for (auto& c : v) c = Complex{uni(rng), 0.0};

  auto normalize = [&](std::vector<Complex>& w) {
    double s = 0.0;
    for (const Complex& c : w) s += std::norm(c);
    s = std::sqrt(s * h);
    for (Complex& c : w) c /= s;
  };
  auto apply = [&](const std::vector<Complex>& w, std::size_t i) {
    Complex r = op.diag[i] * w[i];
    if (i > 0) r += op.off * w[i - 1];
    if (i + 1 < n) r += op.off * w[i + 1];
    return r;
  };
  // Unconjugated Rayleigh quotient: stationary at eigenvectors of a
  // complex symmetric matrix.  The supplied lambda may be 1e-6 off.
  auto rayleigh = [&](const std::vector<Complex>& w) {
    Complex num{0, 0}, den{0, 0};
    double den_h = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      num += w[i] * apply(w, i);
      den += w[i] * w[i];
      den_h += std::norm(w[i]);
    }
    if (std::abs(den) < 1e-8 * den_h) return lambda;  // quasi-null vector
    return num / den;
  };
  auto residual = [&](const std::vector<Complex>& w, Complex mu) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      num += std::norm(apply(w, i) - mu * w[i]);
      den += std::norm(w[i]);
    }
    return std::sqrt(num / den);
  };

  normalize(v);
  for (int it = 0; it < 50; ++it) {
    v = tridiag_shifted_solve(op.diag, op.off, lambda, std::move(v));
    normalize(v);
    if (residual(v, rayleigh(v)) <= 1e-8) {
      // Phase convention: largest-magnitude entry positive real.
      std::size_t imax = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
      const Complex phase = v[imax] / std::abs(v[imax]);
      for (Complex& c : v) c /= phase;
      return v;
    }
  }
  throw InverseIterationStallError(
      "inverse iteration did not reach residual 1e-8 in 50 iterations");
}

}  // namespace ptp
