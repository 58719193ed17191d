#include "ptp/svg.hpp"

#include <cmath>
#include <sstream>

#include "ptp/errors.hpp"

namespace ptp {

std::string emit_svg_convergence(const ConvergenceResult& data) {
  std::vector<ConvergencePoint> pts;
  for (const auto& p : data.table)
    if (p.error > 0.0 && p.h > 0.0) pts.push_back(p);
  if (pts.size() < 2)
    throw TooFewPointsError("emit_svg_convergence: need >= 2 data points");

  double lx_min = 1e300, lx_max = -1e300, ly_min = 1e300, ly_max = -1e300;
  for (const auto& p : pts) {
    const double lx = std::log10(p.h);
    const double ly = std::log10(p.error);
    lx_min = std::min(lx_min, lx);
    lx_max = std::max(lx_max, lx);
    ly_min = std::min(ly_min, ly);
    ly_max = std::max(ly_max, ly);
  }
  if (lx_max - lx_min < 1e-12) lx_max = lx_min + 1.0;
  if (ly_max - ly_min < 1e-12) ly_max = ly_min + 1.0;

  const double width = 480, height = 360;
  const double ml = 60, mr = 20, mt = 20, mb = 50;
  auto px = [&](double lx) {
    return ml + (lx - lx_min) / (lx_max - lx_min) * (width - ml - mr);
  };
  auto py = [&](double ly) {
    return height - mb -
           (ly - ly_min) / (ly_max - ly_min) * (height - mt - mb);
  };

  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  os << "<rect width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\""
     << width - mr << "\" y2=\"" << height - mb
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
     << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 12
     << "\" text-anchor=\"middle\" font-size=\"14\">log10 h</text>\n";
  os << "<text x=\"16\" y=\"" << (mt + height - mb) / 2
     << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 "
        "16 "
     << (mt + height - mb) / 2 << ")\">log10 error</text>\n";

  os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" "
        "points=\"";
  for (const auto& p : pts)
    os << px(std::log10(p.h)) << ',' << py(std::log10(p.error)) << ' ';
  os << "\"/>\n";
  for (const auto& p : pts) {
    os << "<circle cx=\"" << px(std::log10(p.h)) << "\" cy=\""
       << py(std::log10(p.error)) << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
  }
  os << "<text x=\"" << width - mr - 8 << "\" y=\"" << mt + 16
     << "\" text-anchor=\"end\" font-size=\"14\">slope ";
  if (std::isnan(data.order)) {
    os << "n/a";
  } else {
    os << data.order;
  }
  os << "</text>\n</svg>\n";
  return os.str();
}

}  // namespace ptp
