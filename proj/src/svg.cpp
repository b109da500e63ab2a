#include "jung/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jung/newton.hpp"

namespace jung {

namespace {

constexpr double kCell = 40.0;
constexpr double kMargin = 60.0;

}  // namespace

std::string newton_polygon_svg(const BiPoly& p) {
  const LatticePolygon poly = hull(p);
  const std::int64_t max_i = std::max<std::int64_t>(p.degree_in(Axis::X), 1);
  const std::int64_t max_j = std::max<std::int64_t>(p.degree_in(Axis::Y), 1);
  const double width = 2 * kMargin + kCell * static_cast<double>(max_i);
  const double height = 2 * kMargin + kCell * static_cast<double>(max_j);
  auto px = [&](double i) { return kMargin + kCell * i; };
  auto py = [&](double j) { return height - kMargin - kCell * j; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (std::int64_t i = 0; i <= max_i; ++i) {
    svg << "<line x1=\"" << px(i) << "\" y1=\"" << py(0) << "\" x2=\"" << px(i) << "\" y2=\""
        << py(max_j) << "\"/>\n";
  }
  for (std::int64_t j = 0; j <= max_j; ++j) {
    svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(j) << "\" x2=\"" << px(max_i) << "\" y2=\""
        << py(j) << "\"/>\n";
  }
  svg << "</g>\n";

  const auto& v = poly.vertices;
  if (v.size() >= 2) {
    svg << "<polygon fill=\"#cfe2f3\" fill-opacity=\"0.6\" stroke=\"#1f4e79\" stroke-width=\"2\" points=\"";
    for (const auto& m : v) svg << px(static_cast<double>(m.i)) << ',' << py(static_cast<double>(m.j)) << ' ';
    svg << "\"/>\n";
    const auto dirs = directions(p);
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Monomial& a = v[k];
      const Monomial& b = v[(k + 1) % v.size()];
      const double mi = 0.5 * static_cast<double>(a.i + b.i);
      const double mj = 0.5 * static_cast<double>(a.j + b.j);
      const double len = std::hypot(static_cast<double>(dirs[k].rho()), static_cast<double>(dirs[k].sigma()));
      const double ti = mi + 0.6 * static_cast<double>(dirs[k].rho()) / len;
      const double tj = mj + 0.6 * static_cast<double>(dirs[k].sigma()) / len;
      svg << "<line stroke=\"#c00000\" stroke-width=\"1.5\" x1=\"" << px(mi) << "\" y1=\"" << py(mj)
          << "\" x2=\"" << px(ti) << "\" y2=\"" << py(tj) << "\"/>\n"
          << "<text font-family=\"sans-serif\" font-size=\"12\" fill=\"#c00000\" x=\"" << px(ti) + 3
          << "\" y=\"" << py(tj) - 3 << "\">(" << dirs[k].rho() << ',' << dirs[k].sigma() << ")</text>\n";
    }
  }
  svg << "<g fill=\"black\">\n";
  for (const auto& [m, c] : p.terms()) {
    svg << "<circle cx=\"" << px(static_cast<double>(m.i)) << "\" cy=\"" << py(static_cast<double>(m.j))
        << "\" r=\"4\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace jung
