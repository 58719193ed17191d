#pragma once

#include <complex>

#include "ptp/errors.hpp"

namespace ptp {

/// Horizontal line in the complex plane on which an eigenproblem is posed.
/// Sample k is z_k = x_min + k h + i imag_offset, h = (x_max-x_min)/(n-1).
struct Contour {
  enum class Kind { RealLine, ShiftedLine };

  Kind kind = Kind::RealLine;
  double x_min = -12.0;
  double x_max = 12.0;
  double imag_offset = 0.0;
  int n_points = 4000;

  static Contour real_line(double x_min, double x_max, int n_points) {
    return validated({Kind::RealLine, x_min, x_max, 0.0, n_points});
  }

  static Contour shifted_line(double x_min, double x_max, double imag_offset,
                              int n_points) {
    return validated(
        {Kind::ShiftedLine, x_min, x_max, imag_offset, n_points});
  }

  double step() const { return (x_max - x_min) / (n_points - 1); }

  std::complex<double> point(int k) const {
    return {x_min + k * step(), imag_offset};
  }

  Contour with_points(int n) const {
    Contour c = *this;
    c.n_points = n;
    return validated(c);
  }

 private:
  static Contour validated(Contour c) {
    if (!(c.x_min < c.x_max))
      throw Error("contour requires x_min < x_max");
    if (c.n_points < 16)
      throw ContourTooCoarseError("contour requires n_points >= 16");
    return c;
  }
};

}  // namespace ptp
