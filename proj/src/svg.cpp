#include "trimap/svg.hpp"

#include <cmath>
#include <cstdio>

namespace trimap {

namespace {

constexpr double kCenter = 400.0;
constexpr double kScale = 390.0;

double px(double x) { return kCenter + kScale * x; }
double py(double y) { return kCenter - kScale * y; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// Path command from `from` to `to` along the side's geodesic.
std::string side_path(const Geodesic& side, std::complex<double> from,
                      std::complex<double> to) {
  if (side.is_diameter) {
    return "L " + fmt(px(to.real())) + "," + fmt(py(to.imag()));
  }
  const double t1 = std::arg(from - side.center);
  const double t2 = std::arg(to - side.center);
  // Wrapped sweep angle; tile sides always subtend less than a half turn.
  const double sweep = std::atan2(std::sin(t2 - t1), std::cos(t2 - t1));
  // SVG's y axis points down, so a mathematically positive sweep is the
  // flag-0 ("negative angle") direction.
  const char* flag = sweep < 0.0 ? "1" : "0";
  const std::string r = fmt(kScale * side.radius);
  return "A " + r + "," + r + " 0 0," + flag + " " + fmt(px(to.real())) +
         "," + fmt(py(to.imag()));
}

}  // namespace

void write_tiling_svg(std::ostream& out,
                      const std::vector<TriangleTile>& tiles) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"800\" viewBox=\"0 0 800 800\">\n"
      << "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
  for (const TriangleTile& tile : tiles) {
    const char* fill = tile.depth % 2 == 0 ? "#e9eef6" : "#9db8d9";
    out << "<path d=\"M " << fmt(px(tile.a.real())) << ","
        << fmt(py(tile.a.imag())) << " "
        << side_path(tile.sides[0], tile.a, tile.b) << " "
        << side_path(tile.sides[1], tile.b, tile.c) << " "
        << side_path(tile.sides[2], tile.c, tile.a) << " Z\" fill=\"" << fill
        << "\" stroke=\"#1b2a41\" stroke-width=\"1\" "
           "stroke-linejoin=\"round\"/>\n";
  }
  out << "<circle cx=\"400\" cy=\"400\" r=\"390\" fill=\"none\" "
         "stroke=\"#000000\" stroke-width=\"1.5\"/>\n"
      << "</svg>\n";
}

}  // namespace trimap
