#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace ptp::detail {

using Complex = std::complex<double>;

// Solve (T - shift I) x = b for tridiagonal T with constant off-diagonal,
// by LU with partial pivoting (band with two superdiagonals).
inline std::vector<Complex> tridiag_shifted_solve(
    const std::vector<Complex>& diag, Complex off, Complex shift,
    std::vector<Complex> b) {
  const std::size_t n = diag.size();
  std::vector<Complex> d(n), u1(n, Complex{0, 0}), u2(n, Complex{0, 0});
  for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - shift;
  for (std::size_t i = 0; i + 1 < n; ++i) u1[i] = off;

  std::vector<Complex> sub(n, Complex{0, 0});
  for (std::size_t i = 0; i + 1 < n; ++i) sub[i + 1] = off;

  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (std::abs(sub[k + 1]) > std::abs(d[k])) {
      std::swap(d[k], sub[k + 1]);
      std::swap(u1[k], d[k + 1]);
      std::swap(u2[k], u1[k + 1]);
      std::swap(b[k], b[k + 1]);
    }
    if (d[k] == Complex{0, 0}) d[k] = Complex{1e-300, 0};
    const Complex m = sub[k + 1] / d[k];
    d[k + 1] -= m * u1[k];
    u1[k + 1] -= m * u2[k];
    b[k + 1] -= m * b[k];
  }
  if (d[n - 1] == Complex{0, 0}) d[n - 1] = Complex{1e-300, 0};

  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex v = b[i];
    if (i + 1 < n) v -= u1[i] * x[i + 1];
    if (i + 2 < n) v -= u2[i] * x[i + 2];
    x[i] = v / d[i];
  }
  return x;
}

}  // namespace ptp::detail
