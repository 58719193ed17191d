#include "ptp/convergence.hpp"

#include <cmath>
#include <limits>

#include "ptp/discretize.hpp"
#include "ptp/eig.hpp"

namespace ptp {

ConvergenceResult convergence_study(const Hamiltonian& h, const Contour& c,
                                    std::span<const int> n_list, int level) {
  if (n_list.size() < 3)
    throw Error("convergence_study: need at least 3 grid sizes");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw Error("convergence_study: n_list must be strictly increasing");

  ConvergenceResult out;
  std::vector<double> lambdas;
  for (int n : n_list) {
    const Contour cn = c.with_points(n);
    const TridiagOperator op = discretize(h, cn);
    double lambda;
    if (op.is_real()) {
      lambda = eig_sym_tridiag(op.real_diag(), op.off.real(), level + 1)
                   .back();
    } else {
      lambda = eig_complex_tridiag(op, level + 1).back().real();
    }
    lambdas.push_back(lambda);
    out.table.push_back({n, cn.step(), lambda, 0.0});
  }

  // Richardson reference from the two finest grids, assuming the stencil's
  // nominal second order.
  const std::size_t last = lambdas.size() - 1;
  const double h_fine = out.table[last].h;
  const double h_prev = out.table[last - 1].h;
  const double ratio2 = (h_prev / h_fine) * (h_prev / h_fine);
  out.lambda_ref = lambdas[last] +
                   (lambdas[last] - lambdas[last - 1]) / (ratio2 - 1.0);

  for (auto& p : out.table) p.error = std::abs(p.lambda - out.lambda_ref);

  // Log-log least-squares slope over the grids coarser than the finest
  // (the finest is degenerate against its own extrapolation).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < last; ++i) {
    if (out.table[i].error < 1e-13) continue;
    const double x = std::log(out.table[i].h);
    const double y = std::log(out.table[i].error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) {
    out.degenerate = true;
    out.order = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  out.order = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return out;
}

}  // namespace ptp
