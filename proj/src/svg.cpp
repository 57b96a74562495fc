#include "gfan/svg.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <vector>

namespace gfan {

namespace {

constexpr double kScale = 150.0;   // pixels per unit
constexpr double kMargin = 40.0;
constexpr double kExtent = 1.15;   // drawn axis half-length in units

struct Canvas {
  std::ostringstream body;
  double size = 2 * (kExtent * kScale + kMargin);

  double px(double x) const { return kExtent * kScale + kMargin + x * kScale; }
  double py(double y) const { return kExtent * kScale + kMargin - y * kScale; }

  static std::string num(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (std::abs(v) < 5e-3 ? 0.0 : v);
    return os.str();
  }

  void line(double x1, double y1, double x2, double y2, const std::string& stroke,
            double width) {
    body << "  <line x1=\"" << num(px(x1)) << "\" y1=\"" << num(py(y1))
         << "\" x2=\"" << num(px(x2)) << "\" y2=\"" << num(py(y2))
         << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
         << "\"/>\n";
  }

  void text(double x, double y, const std::string& label, const std::string& fill) {
    body << "  <text x=\"" << num(px(x)) << "\" y=\"" << num(py(y))
         << "\" font-size=\"14\" text-anchor=\"middle\" fill=\"" << fill
         << "\">" << label << "</text>\n";
  }
};

// Endpoint of the unit-height segment in the ray's direction.
std::pair<double, double> unit_height_endpoint(double x, double y) {
  if (y > 0) return {x / y, 1.0};
  if (y < 0) return {-x / y, -1.0};
  return {x > 0 ? 1.0 : -1.0, 0.0};
}

}  // namespace

std::string rank2_fan_svg(const Rank2Params& p, std::size_t depth_per_side) {
  Canvas canvas;

  // Axes with simple arrowheads.
  canvas.line(-kExtent, 0, kExtent, 0, "#444444", 1.0);
  canvas.line(0, -kExtent, 0, kExtent, "#444444", 1.0);
  canvas.line(kExtent, 0, kExtent - 0.05, 0.03, "#444444", 1.0);
  canvas.line(kExtent, 0, kExtent - 0.05, -0.03, "#444444", 1.0);
  canvas.line(0, kExtent, 0.03, kExtent - 0.05, "#444444", 1.0);
  canvas.line(0, kExtent, -0.03, kExtent - 0.05, "#444444", 1.0);

  std::set<IntVec> rays;
  if (p.finite()) {
    Fan fan = rank2_fan(p);
    rays.insert(fan.rays().begin(), fan.rays().end());
  } else {
    rays.insert(IntVec{Int(1), Int(0)});
    rays.insert(IntVec{Int(0), Int(1)});
    Rank2RaySequences seq = rank2_ray_sequences(p, depth_per_side);
    rays.insert(seq.first_side.begin(), seq.first_side.end());
    rays.insert(seq.second_side.begin(), seq.second_side.end());
  }
  for (const IntVec& r : rays) {
    const auto [ex, ey] = unit_height_endpoint(r[0].convert_to<double>(),
                                               r[1].convert_to<double>());
    canvas.line(0, 0, ex, ey, "#000000", 1.2);
  }

  if (!p.finite()) {
    const auto [s_minus, s_plus] = limiting_slopes(p);
    const double sm = s_minus.to_double();
    const double sp = s_plus.to_double();
    canvas.line(0, 0, 1.0 / sm, 1.0, "#cc0000", 1.6);
    canvas.line(0, 0, 1.0 / sp, 1.0, "#cc0000", 1.6);
    if (s_minus.compare(s_plus) == 0) {
      canvas.text(1.0 / sm, 1.08, "r+=r-", "#cc0000");
    } else {
      canvas.text(1.0 / sm, 1.08, "r-", "#cc0000");
      canvas.text(1.0 / sp, 1.08, "r+", "#cc0000");
    }
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << Canvas::num(canvas.size) << "\" height=\"" << Canvas::num(canvas.size)
      << "\" viewBox=\"0 0 " << Canvas::num(canvas.size) << " "
      << Canvas::num(canvas.size) << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << canvas.body.str() << "</svg>\n";
  return out.str();
}

}  // namespace gfan
