#include "ptp/shooting.hpp"

#include <algorithm>
#include <cmath>

namespace ptp {

namespace {

struct State {
  Complex psi;
  Complex dpsi;
};

// psi'' = (2 m / hbar^2) (V(z) - E) psi along the contour parameter.
class Rhs {
 public:
  Rhs(const Hamiltonian& h, const Contour& c, Complex E)
      : h_(h), c_(c), factor_(2.0 * h.mass /
                              (Hamiltonian::hbar * Hamiltonian::hbar)),
        E_(E) {}

  State operator()(double t, const State& s) const {
    const Complex z{t, c_.imag_offset};
    return {s.dpsi, factor_ * (h_.potential.eval(z) - E_) * s.psi};
  }

 private:
  const Hamiltonian& h_;
  const Contour& c_;
  double factor_;
  Complex E_;
};

State rk4_step(const Rhs& f, double t, double dt, const State& s) {
  const State k1 = f(t, s);
  const State k2 = f(t + 0.5 * dt, {s.psi + 0.5 * dt * k1.psi,
                                    s.dpsi + 0.5 * dt * k1.dpsi});
  const State k3 = f(t + 0.5 * dt, {s.psi + 0.5 * dt * k2.psi,
                                    s.dpsi + 0.5 * dt * k2.dpsi});
  const State k4 = f(t + dt, {s.psi + dt * k3.psi, s.dpsi + dt * k3.dpsi});
  return {s.psi + dt / 6.0 * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi),
          s.dpsi +
              dt / 6.0 * (k1.dpsi + 2.0 * k2.dpsi + 2.0 * k3.dpsi + k4.dpsi)};
}

double magnitude(const State& s) {
  return std::sqrt(std::norm(s.psi) + std::norm(s.dpsi));
}

// Integrate from t0 to t1 in `steps` fixed RK4 steps, rescaling to avoid
// overflow (the Wronskian condition is scale invariant).
State integrate(const Rhs& f, double t0, double t1, int steps, State s) {
  const double dt = (t1 - t0) / steps;
  for (int i = 0; i < steps; ++i) {
    s = rk4_step(f, t0 + i * dt, dt, s);
    const double mag = magnitude(s);
    if (mag > 1e300) throw OverflowError("shoot: solution magnitude > 1e300");
    if (mag > 1e100) {
      s.psi /= mag;
      s.dpsi /= mag;
    }
  }
  return s;
}

}  // namespace

Complex shoot_residual(const Hamiltonian& h, const Contour& c, Complex E) {
  const Rhs f(h, c, E);
  const double step = c.step();
  const int half = (c.n_points - 1) / 2;
  const double t_mid = c.x_min + half * step;

  const State left =
      integrate(f, c.x_min, t_mid, half, {Complex{0.0, 0.0}, {step, 0.0}});
  const State right = integrate(f, c.x_max, t_mid, c.n_points - 1 - half,
                                {Complex{0.0, 0.0}, {step, 0.0}});

  const Complex w = left.psi * right.dpsi - left.dpsi * right.psi;
  const double scale = magnitude(left) * magnitude(right);
  if (scale == 0.0) throw OverflowError("shoot: vanishing solutions");
  return w / scale;
}

Spectrum shoot_find(const Hamiltonian& h, const Contour& c,
                    std::span<const Complex> seeds, int count,
                    const ShootOptions& opt) {
  if (seeds.empty()) throw Error("shoot_find: no seeds");

  std::vector<Complex> roots;
  std::vector<double> residuals;

  auto deflated = [&](Complex E) {
    Complex w = shoot_residual(h, c, E);
    for (Complex r : roots) {
      const Complex d = E - r;
      if (std::abs(d) > 1e-14) w /= d;
    }
    return w;
  };

  for (Complex seed : seeds) {
    if (static_cast<int>(roots.size()) >= count) break;
    try {
      Complex e0 = seed;
      Complex e1 = seed + Complex{1e-4 * std::max(1.0, std::abs(seed)), 0.0};
      Complex w0 = deflated(e0);
      Complex w1 = deflated(e1);
      bool converged = false;
      for (int it = 0; it < opt.max_iterations; ++it) {
        if (w1 == w0) break;
        const Complex e2 = e1 - w1 * (e1 - e0) / (w1 - w0);
        const double de = std::abs(e2 - e1);
        e0 = e1;
        w0 = w1;
        e1 = e2;
        if (de <= opt.step_tol * std::max(1.0, std::abs(e1))) {
          converged = true;
          break;
        }
        w1 = deflated(e1);
      }
      if (!converged) continue;  // NoRootFromSeed: recorded by omission
      bool duplicate = false;
      for (Complex r : roots)
        if (std::abs(r - e1) < opt.merge_tol) duplicate = true;
      if (duplicate) continue;
      roots.push_back(e1);
      residuals.push_back(std::abs(shoot_residual(h, c, e1)));
    } catch (const OverflowError&) {
      continue;  // seed led outside the eligible region
    }
  }

  if (static_cast<int>(roots.size()) < count)
    throw SpectrumIncompleteError("shoot_find: fewer roots than requested");

  Spectrum out;
  out.eigenvalues = std::move(roots);
  out.residuals = std::move(residuals);
  out.method = "shoot";
  out.contour = c;
  out.sort();
  return out;
}

}  // namespace ptp
