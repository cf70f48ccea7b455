#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trigrid/core.hpp"

namespace trigrid {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q" (always with a denominator, e.g. "0/1").
std::string to_string(const Rational& r);
/// Accepts "p/q" or "p"; throws std::invalid_argument.
Rational parse_rational(std::string_view text);
/// r - floor(r), in [0, 1).
Rational frac(const Rational& r);

struct GeoPoint {
  Rational x;
  Rational y;
  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

bool operator<(const GeoPoint& a, const GeoPoint& b);

/// Points on R^2/Z^2 such that every vertical, horizontal and slope -1 line
/// holds 0 or 2 of them. Points are sorted; partner[k][i] is the index of
/// point i's partner along direction k (column, row, diagonal).
class GeometricTGD {
 public:
  GeometricTGD() = default;

  const std::vector<GeoPoint>& points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()) / 2; }
  int partner(LineDirection dir, int i) const { return partners_[static_cast<int>(dir)][i]; }

  friend bool operator==(const GeometricTGD& a, const GeometricTGD& b) { return a.points_ == b.points_; }

 private:
  std::vector<GeoPoint> points_;
  std::array<std::vector<int>, 3> partners_;

  friend GeometricTGD validate_geometric(std::vector<GeoPoint> points);
};

/// Reduces coordinates mod 1 and pairs points along each direction.
/// Throws DuplicatePoint, or UnpairedPoint for the first bad class in the
/// order column, row, diagonal (each by ascending coordinate).
GeometricTGD validate_geometric(std::vector<GeoPoint> points);

/// Cell (i, j) -> ((4i+1)/(4n), (4j+1)/(4n)).
GeometricTGD to_geometric(const CombinatorialTGD& d);

/// (x, y) -> (y, -x - y mod 1).
GeometricTGD geometric_rotate(const GeometricTGD& g);

/// Grids of G, rot(G), rot^2(G) with (col, row) = (x-rank, y-rank); n = b.
std::array<GridDiagram, 3> geometric_grids(const GeometricTGD& g);

}  // namespace trigrid
