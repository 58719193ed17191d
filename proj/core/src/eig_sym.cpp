#include <algorithm>
#include <cmath>
#include <limits>

#include "ptp/eig.hpp"

namespace ptp {

namespace {

// Sturm count: number of eigenvalues strictly below x, via the LDL^T
// pivot recurrence d_i = (diag_i - x) - off^2 / d_{i-1}.
int sturm_count(std::span<const double> diag, double off, double x) {
  const double off2 = off * off;
  const double tiny = std::numeric_limits<double>::min() /
                      std::numeric_limits<double>::epsilon();
  int count = 0;
  bool first = true;
  double d = 0.0;
  for (double a : diag) {
    d = first ? (a - x) : (a - x) - off2 / d;
    first = false;
    // A vanishing pivot counts as a sign change (x sits on an eigenvalue
    // of a leading principal minor); clamp it negative to keep going.
    if (std::abs(d) < tiny) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> eig_sym_tridiag(std::span<const double> diag, double off,
                                    int count) {
  const int n = static_cast<int>(diag.size());
  if (count < 0 || count > n)
    throw Error("eig_sym_tridiag: count out of range");

  double lo = diag[0], hi = diag[0];
  for (double a : diag) {
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  lo -= 2.0 * std::abs(off) + 1.0;
  hi += 2.0 * std::abs(off) + 1.0;

  std::vector<double> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (b - a <= 1e-12 * std::max(1.0, std::abs(mid))) break;
      if (sturm_count(diag, off, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
    }
    const double lambda = 0.5 * (a + b);
    out.push_back(lambda);
    lo = a;  // eigenvalue k+1 cannot lie below this bracket
  }
  return out;
}

}  // namespace ptp
