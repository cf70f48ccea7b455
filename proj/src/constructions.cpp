#include "trigrid/constructions.hpp"

#include <string>
#include <vector>

namespace trigrid {

CombinatorialTGD example_n2() {
  const std::vector<Cell> cells{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  return validate_combinatorial(2, cells);
}

CombinatorialTGD example_n3() {
  std::vector<Cell> cells;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) cells.push_back({i, j});
  return validate_combinatorial(3, cells);
}

CombinatorialTGD staircase(int n) {
  if (n < 2) throw InvalidParameter("staircase needs n >= 2, got " + std::to_string(n));
  std::vector<Cell> cells;
  for (int i = 0; i < n; ++i) {
    cells.push_back({i, i});
    cells.push_back({i, (i + 1) % n});
  }
  return validate_combinatorial(n, cells);
}

CombinatorialTGD squares_antidiagonal(int k) {
  if (k < 1 || k % 2 == 0)
    throw InvalidParameter("squares family needs odd k >= 1, got " + std::to_string(k));
  std::vector<Cell> cells;
  for (int t = 0; t < k; ++t) {
    // diagonals 2t and 2t + k are distinct across blocks because k is odd
    cells.push_back({t, t});
    cells.push_back({t + k, t});
    cells.push_back({t, t + k});
    cells.push_back({t + k, t + k});
  }
  return validate_combinatorial(2 * k, cells);
}

GridDiagram trefoil_grid() {
  return GridDiagram(5, {{0, 0}, {0, 2}, {1, 1}, {1, 3}, {2, 2}, {2, 4}, {3, 0}, {3, 3}, {4, 1}, {4, 4}});
}

GridDiagram hopf_grid() {
  return GridDiagram(4, {{0, 0}, {0, 2}, {2, 0}, {2, 2}, {1, 1}, {1, 3}, {3, 1}, {3, 3}});
}

GeometricTGD pushoff(const GridDiagram& g) {
  const int n = g.grid_number();
  const Rational eps(1, 64 * n * n * n);
  const Rational eps2 = eps * eps;
  const Rational shift = eps2 * eps;
  std::vector<GeoPoint> pts;
  for (Cell c : g.points()) {
    const Rational x = Rational(4 * c.col + 1, 4 * n) + c.col * eps;
    const Rational y = Rational(4 * c.row + 1, 4 * n) + c.row * eps2;
    pts.push_back({x, y});
    pts.push_back({x - shift, y + shift});
  }
  return validate_geometric(std::move(pts));
}

}  // namespace trigrid
