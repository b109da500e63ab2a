#pragma once

#include <string>

#include "jung/bipoly.hpp"

namespace jung {

// Static SVG 1.1 figure of the support of P: grid, lattice points, the Newton
// polygon, and each edge's outward normal labeled "(rho,sigma)".
std::string newton_polygon_svg(const BiPoly& p);

}  // namespace jung
