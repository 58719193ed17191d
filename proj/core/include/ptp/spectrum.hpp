#pragma once

#include <string>
#include <vector>

#include "ptp/contour.hpp"
#include "ptp/potential.hpp"

namespace ptp {

/// Ordered set of complex eigenvalues with method and residual metadata.
struct Spectrum {
  std::vector<Complex> eigenvalues;  // sorted by real part, ties by imag
  std::vector<double> residuals;    // per-eigenvalue, method-defined
  std::string method;               // "fd", "shoot", "exact", ...
  Contour contour;

  void sort();
};

/// CSV with header `index,re,im,residual,method,n_points,contour_kind,
/// imag_offset`; numbers printed with 17 significant digits.
std::string spectrum_to_csv(const Spectrum& s);

}  // namespace ptp
