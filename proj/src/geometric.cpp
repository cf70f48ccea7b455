#include "trigrid/geometric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trigrid {

using boost::multiprecision::cpp_int;

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    return cpp_int(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  cpp_int num = parse_int(text.substr(0, slash));
  cpp_int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

Rational frac(const Rational& r) {
  const cpp_int& num = boost::multiprecision::numerator(r);
  const cpp_int& den = boost::multiprecision::denominator(r);  // always positive
  cpp_int q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return r - Rational(q);
}

bool operator<(const GeoPoint& a, const GeoPoint& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

GeometricTGD validate_geometric(std::vector<GeoPoint> points) {
  for (GeoPoint& p : points) {
    p.x = frac(p.x);
    p.y = frac(p.y);
  }
  std::sort(points.begin(), points.end());
  if (auto it = std::adjacent_find(points.begin(), points.end()); it != points.end())
    throw DuplicatePoint(to_string(it->x), to_string(it->y));

  GeometricTGD g;
  const int m = static_cast<int>(points.size());
  for (int dir = 0; dir < 3; ++dir) {
    std::map<Rational, std::vector<int>> classes;
    for (int i = 0; i < m; ++i) {
      const GeoPoint& p = points[i];
      Rational key = dir == 0 ? p.x : dir == 1 ? p.y : frac(p.x + p.y);
      classes[key].push_back(i);
    }
    std::vector<int> partner(m, -1);
    for (const auto& [value, members] : classes) {
      if (members.size() != 2)
        throw UnpairedPoint(static_cast<LineDirection>(dir), to_string(value), static_cast<int>(members.size()));
      partner[members[0]] = members[1];
      partner[members[1]] = members[0];
    }
    g.partners_[dir] = std::move(partner);
  }
  g.points_ = std::move(points);
  return g;
}

GeometricTGD to_geometric(const CombinatorialTGD& d) {
  const int n = d.grid_number();
  std::vector<GeoPoint> pts;
  pts.reserve(d.cells().size());
  for (Cell c : d.cells())
    pts.push_back({Rational(4 * c.col + 1, 4 * n), Rational(4 * c.row + 1, 4 * n)});
  return validate_geometric(std::move(pts));
}

GeometricTGD geometric_rotate(const GeometricTGD& g) {
  std::vector<GeoPoint> pts;
  pts.reserve(g.points().size());
  for (const GeoPoint& p : g.points()) pts.push_back({p.y, frac(-p.x - p.y)});
  return validate_geometric(std::move(pts));
}

namespace {

GridDiagram rank_grid(const GeometricTGD& g, ColorPair label) {
  std::vector<Rational> xs, ys;
  for (const GeoPoint& p : g.points()) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  for (auto* v : {&xs, &ys}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  auto rank = [](const std::vector<Rational>& v, const Rational& r) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), r) - v.begin());
  };
  std::vector<Cell> cells;
  for (const GeoPoint& p : g.points()) cells.push_back({rank(xs, p.x), rank(ys, p.y)});
  return GridDiagram(std::max(1, g.size()), std::move(cells), label);
}

}  // namespace

std::array<GridDiagram, 3> geometric_grids(const GeometricTGD& g) {
  const GeometricTGD r1 = geometric_rotate(g);
  const GeometricTGD r2 = geometric_rotate(r1);
  return {rank_grid(g, ColorPair::alpha_beta), rank_grid(r1, ColorPair::beta_gamma),
          rank_grid(r2, ColorPair::gamma_alpha)};
}

}  // namespace trigrid
