#pragma once

// SVG 1.1 drawings of planar and circle configurations. Display only: floating
// point is used for placement and nothing here feeds a verdict.

#include <cmath>
#include <numbers>
#include <string>

#include "pierce/document.hpp"

namespace pierce {

struct PlotOptions {
  double theta = 1.0 / (2.0 * std::numbers::pi);  // display value of the formal rotation, in turns
  double size = 480.0;
};

/// Discs: P and B black, G gray, R white. On the circle, points with a nonzero
/// rotation coefficient are drawn large.
std::string render_svg(const ConfigDocument& doc, const PlotOptions& opts = {});

}  // namespace pierce
