#pragma once

#include <string>

#include "ford/numeric.hpp"

namespace ford::render {

// Deterministic SVG output: unit square mapped to a 1000x1000 viewbox with
// the y-axis flipped, circles emitted in (q, p) order, fixed 4-decimal
// coordinates. Identical inputs give byte-identical output.

// All Ford circles with q <= qmax in [0,1].
std::string circles_svg(i64 qmax);

// Circles plus the line y = x/m; touched circles carry class="touched".
// Untouched background circles are limited to q <= min(m, 64) to keep the
// file size bounded; every touched circle is always drawn.
std::string line_svg(i64 m);

// Lattice points (p, q) of the extracted fractions (0/1 excluded) with the
// boundary line q = p and the curve q = m/p.
std::string lattice_svg(i64 m);

}  // namespace ford::render
