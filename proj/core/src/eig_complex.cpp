#include <algorithm>
#include <random>
#include <cmath>
#include <limits>

#include "ptp/eig.hpp"
#include "tridiag_solve.hpp"

namespace ptp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Branch of the complex square root chosen so that x/r has positive real
// part (ties by imaginary part).  This makes the rotation invariant under
// global negation of the matrix, so spectra of T and -T negate exactly.
Complex aligned_sqrt(Complex w, Complex align) {
  Complex r = std::sqrt(w);
  if (r == Complex{0.0, 0.0}) return r;
  const Complex q = align / r;
  if (q.real() < 0.0 || (q.real() == 0.0 && q.imag() < 0.0)) r = -r;
  return r;
}

struct SweepResult {
  bool ok = true;
};

// One implicit single-shift QR sweep on the active block [l, m] of a
// complex symmetric tridiagonal matrix.  Fails (without touching d, e)
// only through the caller's retry on near-breakdown; a mid-sweep
// breakdown leaves the block inconsistent, so the caller works on copies.
SweepResult qr_sweep(std::vector<Complex>& d, std::vector<Complex>& e, int l,
                     int m, Complex shift) {
  Complex x = d[l] - shift;
  Complex z = e[l];
  Complex bulge{0.0, 0.0};
  for (int k = l; k < m; ++k) {
    const Complex w = x * x + z * z;
    const double scale = std::norm(x) + std::norm(z);
    // Complex-orthogonal rotations break down when x^2 + z^2 ~ 0.
    if (std::abs(w) < 1e-12 * scale || scale == 0.0) return {false};
    const Complex r = aligned_sqrt(w, x != Complex{0.0, 0.0} ? x : z);
    const Complex c = x / r;
    const Complex s = z / r;

    if (k > l) e[k - 1] = c * e[k - 1] + s * bulge;

    const Complex t11 = d[k], t12 = e[k], t22 = d[k + 1];
    const Complex u11 = c * t11 + s * t12;
    const Complex u12 = c * t12 + s * t22;
    const Complex u21 = -s * t11 + c * t12;
    const Complex u22 = -s * t12 + c * t22;
    d[k] = u11 * c + u12 * s;
    e[k] = -u11 * s + u12 * c;
    d[k + 1] = -u21 * s + u22 * c;

    if (k < m - 1) {
      bulge = s * e[k + 1];
      e[k + 1] = c * e[k + 1];
      x = e[k];
      z = bulge;
    }
  }
  return {true};
}

Complex wilkinson_shift(const std::vector<Complex>& d,
                        const std::vector<Complex>& e, int m) {
  const Complex delta = 0.5 * (d[m - 1] - d[m]);
  const Complex em = e[m - 1];
  const Complex disc = delta * delta + em * em;
  Complex root = std::sqrt(disc);
  // Pick the branch maximizing |delta + root|; symmetric under negation.
  if (std::abs(delta - root) > std::abs(delta + root)) root = -root;
  const Complex denom = delta + root;
  if (std::abs(denom) < kEps * (std::abs(delta) + std::abs(em)) ||
      denom == Complex{0.0, 0.0}) {
    return d[m] - em;
  }
  return d[m] - em * em / denom;
}

// Refine a QR eigenvalue estimate by inverse iteration with an
// unconjugated Rayleigh-quotient update.  QR forward error accumulates
// over thousands of non-unitary rotations when the eigenvalues are badly
// conditioned; one backward-stable solve recovers most of it.  All steps
// are sign-symmetric, so spectra of T and -T still negate exactly.
Complex refine_eigenvalue(const std::vector<Complex>& diag, Complex off,
                          Complex lambda) {
  const std::size_t n = diag.size();
  if (n == 0) return lambda;

  double mat_norm = 2.0 * std::abs(off);
  for (const Complex& a : diag) mat_norm = std::max(mat_norm, std::abs(a));

  // Random start: a structured vector can be nearly deficient in the
  // target eigenvector (e.g. parity on a symmetric grid) and stagnate.
  std::mt19937 rng(2024);  // fixed seed: deterministic output
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<Complex> v(n);
  for (auto& c : v) c = Complex{uni(rng), 0.0};

  Complex mu = lambda;
  Complex best = lambda;
  double best_res = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 5; ++it) {
    v = detail::tridiag_shifted_solve(diag, off, mu, std::move(v));
    double s = 0.0;
    for (const Complex& c : v) s += std::norm(c);
    s = std::sqrt(s);
    if (!(s > 0.0) || !std::isfinite(s)) break;
    for (Complex& c : v) c /= s;

    Complex num{0.0, 0.0}, den{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      Complex r = diag[i] * v[i];
      if (i > 0) r += off * v[i - 1];
      if (i + 1 < n) r += off * v[i + 1];
      num += v[i] * r;
      den += v[i] * v[i];
    }
    if (std::abs(den) < 1e-8) break;  // quasi-null vector
    const Complex next = num / den;
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;

    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex r = diag[i] * v[i] - next * v[i];
      if (i > 0) r += off * v[i - 1];
      if (i + 1 < n) r += off * v[i + 1];
      res += std::norm(r);
    }
    res = std::sqrt(res);
    if (res < best_res) {
      best_res = res;
      best = next;
    }
    mu = next;
    if (res <= 1e-13 * mat_norm) break;
  }
  // Accept only a true eigenpair that stayed on the same eigenvalue.
  if (best_res > 1e-10 * mat_norm) return lambda;
  if (std::abs(best - lambda) > 1e-3 * std::max(1.0, std::abs(lambda)))
    return lambda;
  return best;
}

}  // namespace

std::vector<Complex> qr_eigenvalues(std::vector<Complex> d,
                                    std::vector<Complex> e) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return {};
  if (static_cast<int>(e.size()) != n - 1)
    throw Error("qr_eigenvalues: off-diagonal length must be n - 1");

  const int cap = 60 * n;
  int total = 0;
  int m = n - 1;
  int since_deflation = 0;

  while (m > 0) {
    for (int i = 0; i < m; ++i) {
      if (std::abs(e[i]) <=
          kEps * (std::abs(d[i]) + std::abs(d[i + 1]))) {
        e[i] = Complex{0.0, 0.0};
      }
    }
    if (e[m - 1] == Complex{0.0, 0.0}) {
      --m;
      since_deflation = 0;
      continue;
    }
    int l = m;
    while (l > 0 && e[l - 1] != Complex{0.0, 0.0}) --l;

    if (++total > cap)
      throw QRNoConvergenceError("qr_eigenvalues: sweep cap exceeded", m);
    ++since_deflation;

    Complex shift = wilkinson_shift(d, e, m);
    if (since_deflation % 16 == 0) {
      // Exceptional shift to break rare cycles.
      shift = d[m] + 1.25 * e[m - 1];
    }

    // Sweep on copies so a breakdown can be retried with a nudged shift.
    bool done = false;
    for (int attempt = 0; attempt < 6 && !done; ++attempt) {
      std::vector<Complex> dc = d;
      std::vector<Complex> ec = e;
      if (qr_sweep(dc, ec, l, m, shift).ok) {
        d = std::move(dc);
        e = std::move(ec);
        done = true;
      } else {
        const double mag = std::abs(d[m]) + std::abs(e[m - 1]) + 1.0;
        shift += Complex{3e-8 * mag, 1e-8 * mag};
      }
    }
    if (!done)
      throw QRNoConvergenceError("qr_eigenvalues: rotation breakdown", m);
  }

  std::sort(d.begin(), d.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return d;
}

std::vector<Complex> eig_complex_tridiag(const TridiagOperator& op,
                                         int count) {
  if (count < 0 || count > static_cast<int>(op.dim()))
    throw Error("eig_complex_tridiag: count out of range");
  std::vector<Complex> e(op.dim() > 0 ? op.dim() - 1 : 0, op.off);
  std::vector<Complex> all = qr_eigenvalues(op.diag, std::move(e));
  all.resize(count);
  for (Complex& lambda : all)
    lambda = refine_eigenvalue(op.diag, op.off, lambda);
  return all;
}

}  // namespace ptp
