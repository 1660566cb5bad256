#pragma once
#include <string>

#include "arrlcs/wiring.hpp"

namespace arrlcs {

// SVG picture of the generic affine chart: the lines, their labels, the
// multiple points, and the sweep base line.  Coordinates are computed from
// the exact rationals (fixed 6-decimal rendering), so equal inputs give
// byte-equal output.
std::string render_svg(const Arrangement& arr);
std::string render_svg(const WiringDiagram& diag, int infinity_label);

}  // namespace arrlcs
