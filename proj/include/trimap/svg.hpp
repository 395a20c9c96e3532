#pragma once

#include <ostream>
#include <vector>

#include "trimap/numeric_verify.hpp"

namespace trimap {

// Renders tiles into an 800x800 SVG: the unit disc becomes a 780-px circle
// and geodesic sides are drawn as true circular arcs.  One <path> per
// tile, in input order; output bytes depend only on the input.
void write_tiling_svg(std::ostream& out, const std::vector<TriangleTile>& tiles);

}  // namespace trimap
