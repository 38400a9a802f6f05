#pragma once

#include <string>
#include <vector>

#include "k3walls/walls.hpp"

namespace k3walls::cli {

struct PlotMark {
  Rational beta;
  Rational t;
  std::string label;
};

/// Everything needed to draw a wall diagram. beta runs horizontally and
/// alpha = sqrt(t) vertically, from 0 to sqrt(t_max).
struct PlotSpec {
  Region region;
  std::vector<Wall> walls;
  std::vector<PlotMark> marks;
  int width = 640;
  int height = 400;

  /// Throws Error(kInvalidArgument) on an empty region or non-positive size.
  void validate() const;
};

/// SVG 1.1 document. Floating point is used only here, for square roots and
/// pixel coordinates; output is byte-identical for identical specs.
std::string render_svg(const PlotSpec& spec);

}  // namespace k3walls::cli
