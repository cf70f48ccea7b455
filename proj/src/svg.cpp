#include "trigrid/svg.hpp"

#include <algorithm>
#include <climits>

#include <fmt/format.h>

#include "trigrid/link_diagram.hpp"

namespace trigrid {

namespace {

std::string header(int width, int height) {
  return fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n"
      "<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{1}\" fill=\"#FFFFFF\"/>\n",
      width, height);
}

/// Maps grid units (origin bottom-left) to pixels.
struct Frame {
  int n;
  SvgStyle style;
  double x(double gx) const { return style.margin + gx * style.cell; }
  double y(double gy) const { return style.margin + (n - gy) * style.cell; }
};

const char* vertical_color(ColorPair p) {
  switch (p) {
    case ColorPair::alpha_beta: return kAlphaColor;
    case ColorPair::beta_gamma: return kBetaColor;
    case ColorPair::gamma_alpha: return kGammaColor;
  }
  return kAlphaColor;
}

const char* horizontal_color(ColorPair p) {
  switch (p) {
    case ColorPair::alpha_beta: return kBetaColor;
    case ColorPair::beta_gamma: return kGammaColor;
    case ColorPair::gamma_alpha: return kAlphaColor;
  }
  return kBetaColor;
}

void square_lines(std::string& s, const Frame& f, const char* vcolor, const char* hcolor) {
  const int n = f.n;
  s += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#999999\" "
                   "stroke-width=\"0.5\"/>\n",
                   f.x(0), f.y(n), n * f.style.cell, n * f.style.cell);
  for (int k = 1; k <= n; ++k)
    s += fmt::format("<path class=\"line vertical\" d=\"M {} {} L {} {}\" stroke=\"{}\" stroke-width=\"1\"/>\n",
                     f.x(k), f.y(0), f.x(k), f.y(n), vcolor);
  for (int k = 1; k <= n; ++k)
    s += fmt::format("<path class=\"line horizontal\" d=\"M {} {} L {} {}\" stroke=\"{}\" stroke-width=\"1\"/>\n",
                     f.x(0), f.y(k), f.x(n), f.y(k), hcolor);
}

}  // namespace

std::string render_svg(const CombinatorialTGD& d, const SvgStyle& style) {
  const int n = d.grid_number();
  const Frame f{n, style};
  const int side = n * style.cell + 2 * style.margin;
  std::string s = header(side, side);
  if (style.grid_lines) {
    square_lines(s, f, kAlphaColor, kBetaColor);
    for (int k = 1; k <= n; ++k) {
      // x + y = k, plus its wrapped piece x + y = k + n inside the square.
      std::string path = fmt::format("M {} {} L {} {}", f.x(k), f.y(0), f.x(0), f.y(k));
      if (k < n) path += fmt::format(" M {} {} L {} {}", f.x(n), f.y(k), f.x(k), f.y(n));
      s += fmt::format("<path class=\"line diagonal\" d=\"{}\" stroke=\"{}\" stroke-width=\"1\" fill=\"none\"/>\n",
                       path, kGammaColor);
    }
  }
  for (Cell c : d.cells())
    s += fmt::format("<circle class=\"dot\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#000000\"/>\n",
                     f.x(c.col + 0.25), f.y(c.row + 0.25), style.dot_radius);
  s += "</svg>\n";
  return s;
}

std::string render_svg(const GridDiagram& g, const SvgStyle& style) {
  const int n = g.grid_number();
  const Frame f{n, style};
  const int side = n * style.cell + 2 * style.margin;
  std::string s = header(side, side);
  const char* vcolor = vertical_color(g.label());
  const char* hcolor = horizontal_color(g.label());
  if (style.grid_lines) square_lines(s, f, vcolor, hcolor);

  // Points sit at cell centres here; link strands join them.
  const PlanarLinkDiagram p = planar_diagram(g);
  auto cx = [&](int col) { return f.x(col + 0.5); };
  auto cy = [&](int row) { return f.y(row + 0.5); };
  for (const Segment& seg : p.segments)
    if (!seg.horizontal)
      s += fmt::format("<path class=\"strand vertical\" d=\"M {} {} L {} {}\" stroke=\"#000000\" "
                       "stroke-width=\"2\"/>\n",
                       cx(seg.line), cy(seg.from), cx(seg.line), cy(seg.to));
  for (const Segment& seg : p.segments)
    if (seg.horizontal)
      s += fmt::format("<path class=\"strand horizontal\" d=\"M {0} {2} L {1} {2}\" stroke=\"#FFFFFF\" "
                       "stroke-width=\"6\"/>\n<path class=\"strand horizontal\" d=\"M {0} {2} L {1} {2}\" "
                       "stroke=\"#000000\" stroke-width=\"2\"/>\n",
                       cx(seg.from), cx(seg.to), cy(seg.line));
  for (Cell c : g.points())
    s += fmt::format("<circle class=\"dot\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#000000\"/>\n", cx(c.col),
                     cy(c.row), style.dot_radius);
  s += "</svg>\n";
  return s;
}

std::string render_svg(const Front& front, const SvgStyle& style) {
  int xmin = INT_MAX, xmax = INT_MIN, ymin = INT_MAX, ymax = INT_MIN;
  for (const auto& pl : front.polylines)
    for (const auto& v : pl.vertices) {
      xmin = std::min(xmin, v.x);
      xmax = std::max(xmax, v.x);
      ymin = std::min(ymin, v.y);
      ymax = std::max(ymax, v.y);
    }
  if (front.polylines.empty()) xmin = xmax = ymin = ymax = 0;
  const int unit = style.cell / 2;
  const int width = (xmax - xmin) * unit + 2 * style.margin;
  const int height = (ymax - ymin) * unit + 2 * style.margin;
  auto px = [&](double x) { return style.margin + (x - xmin) * unit; };
  auto py = [&](double y) { return style.margin + (ymax - y) * unit; };

  std::string s = header(width, height);
  for (const auto& pl : front.polylines) {
    const auto& vs = pl.vertices;
    const std::size_t m = vs.size();
    auto mid = [&](std::size_t a) {
      const auto& p = vs[a % m];
      const auto& q = vs[(a + 1) % m];
      return std::pair{(p.x + q.x) / 2.0, (p.y + q.y) / 2.0};
    };
    auto [sx, sy] = mid(0);
    std::string d = fmt::format("M {} {}", px(sx), py(sy));
    for (std::size_t k = 1; k <= m; ++k) {
      const auto& v = vs[k % m];
      auto [mx, my] = mid(k);
      if (v.cusp)
        d += fmt::format(" L {} {} L {} {}", px(v.x), py(v.y), px(mx), py(my));
      else
        d += fmt::format(" Q {} {} {} {}", px(v.x), py(v.y), px(mx), py(my));
    }
    d += " Z";
    s += fmt::format("<path class=\"front\" data-component=\"{}\" d=\"{}\" fill=\"none\" stroke=\"#000000\" "
                     "stroke-width=\"2\"/>\n",
                     pl.component, d);
    for (const auto& v : vs)
      if (v.cusp)
        s += fmt::format("<circle class=\"cusp\" data-direction=\"{}\" cx=\"{}\" cy=\"{}\" r=\"3\" "
                         "fill=\"#CC0000\"/>\n",
                         v.down ? "down" : "up", px(v.x), py(v.y));
  }
  for (const auto& x : front.crossings)
    s += fmt::format("<circle class=\"crossing\" data-sign=\"{}\" data-over=\"{}\" data-under=\"{}\" cx=\"{}\" "
                     "cy=\"{}\" r=\"2\" fill=\"#0000CC\"/>\n",
                     x.sign, x.over_component, x.under_component, px(x.x), py(x.y));
  s += "</svg>\n";
  return s;
}

}  // namespace trigrid
