#include "ptp/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace ptp {

std::vector<double> ho_levels(double omega, HoBranch branch, int n_max) {
  if (omega <= 0.0) throw std::invalid_argument("ho_levels: omega must be > 0");
  if (n_max < 0) throw std::invalid_argument("ho_levels: n_max must be >= 0");
  const double s = branch == HoBranch::Standard ? 1.0 : -1.0;
  std::vector<double> out;
  out.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back(s * omega * (n + 0.5));
  return out;
}

std::vector<double> shifted_osc_levels(double alpha, QuasiParity q,
                                       int n_max) {
  if (alpha < 0.0)
    throw std::invalid_argument("shifted_osc_levels: alpha must be >= 0");
  if (q.q != 1 && q.q != -1)
    throw std::invalid_argument("shifted_osc_levels: quasi-parity must be +-1");
  if (n_max < 0)
    throw std::invalid_argument("shifted_osc_levels: n_max must be >= 0");
  std::vector<double> out;
  out.reserve(n_max + 1);
  const bool collapsed = std::abs(alpha - 0.5) < 1e-14;
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(collapsed ? 2.0 * n + 1.0 : 4.0 * n + 2.0 + 2.0 * q.q * alpha);
  }
  return out;
}

std::vector<double> trig_pt_levels(double B, int n_max) {
  if (B < 0.0) throw std::invalid_argument("trig_pt_levels: B must be >= 0");
  if (n_max < 0) throw std::invalid_argument("trig_pt_levels: n_max must be >= 0");
  const double lambda = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * B));
  std::vector<double> out;
  out.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double s = n + lambda;
    out.push_back(s * s);
  }
  return out;
}

}  // namespace ptp
