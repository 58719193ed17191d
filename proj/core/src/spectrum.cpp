#include "ptp/spectrum.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace ptp {

namespace {

std::string fmt17(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

void Spectrum::sort() {
  std::vector<std::size_t> order(eigenvalues.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    if (eigenvalues[a].real() != eigenvalues[b].real())
      return eigenvalues[a].real() < eigenvalues[b].real();
    return eigenvalues[a].imag() < eigenvalues[b].imag();
  });
  std::vector<Complex> ev;
  std::vector<double> res;
  ev.reserve(order.size());
  for (std::size_t i : order) {
    ev.push_back(eigenvalues[i]);
    if (i < residuals.size()) res.push_back(residuals[i]);
  }
  eigenvalues = std::move(ev);
  if (res.size() == eigenvalues.size()) residuals = std::move(res);
}

std::string spectrum_to_csv(const Spectrum& s) {
  std::ostringstream os;
  os << "index,re,im,residual,method,n_points,contour_kind,imag_offset\n";
  const char* kind =
      s.contour.kind == Contour::Kind::RealLine ? "real" : "shifted";
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    const double res = i < s.residuals.size() ? s.residuals[i] : 0.0;
    os << i << ',' << fmt17(s.eigenvalues[i].real()) << ','
       << fmt17(s.eigenvalues[i].imag()) << ',' << fmt17(res) << ','
       << s.method << ',' << s.contour.n_points << ',' << kind << ','
       << fmt17(s.contour.imag_offset) << '\n';
  }
  return os.str();
}

}  // namespace ptp
