#pragma once

#include "proxyrep/geometry.hpp"

#include <string>

namespace proxyrep {

// Number-line drawing of an instance and an optional arrangement as SVG 1.1:
// candidates as squares, proxies as filled circles, candidate bisectors as
// thin dashed verticals and adjacent-proxy bisectors as bold dashed ones.
// The 1200x200 viewport maps [-1/2, 3/2] affinely onto the x axis; output is
// byte-identical for identical inputs.
std::string render_svg(const Instance& inst, const Arrangement* arr, bool bisectors = true);

}  // namespace proxyrep
