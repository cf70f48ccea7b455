#pragma once

#include <string>

#include "trigrid/core.hpp"
#include "trigrid/legendrian.hpp"

namespace trigrid {

inline constexpr const char* kAlphaColor = "#CC0000";  // vertical
inline constexpr const char* kBetaColor = "#0000CC";   // horizontal
inline constexpr const char* kGammaColor = "#00AA00";  // diagonal

struct SvgStyle {
  int cell = 40;  // pixels per grid unit; multiples of 4 keep coordinates integral
  int margin = 20;
  int dot_radius = 4;
  bool grid_lines = true;
};

/// Torus square with n vertical (alpha), n horizontal (beta) and n wrapping
/// diagonal (gamma) lines, one element each, and one dot per point.
std::string render_svg(const CombinatorialTGD& d, const SvgStyle& style = {});
/// A single grid with its link; horizontal strands drawn over vertical ones.
std::string render_svg(const GridDiagram& g, const SvgStyle& style = {});
/// Closed slope +-1 paths, one per component; non-cusp corners are rounded
/// and cusps are marked.
std::string render_svg(const Front& f, const SvgStyle& style = {});

}  // namespace trigrid
