#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trigrid/errors.hpp"

namespace trigrid {

/// A cell of the n x n torus grid: column index `col`, row index `row`.
struct Cell {
  int col = 0;
  int row = 0;
  auto operator<=>(const Cell&) const = default;
};

/// Which ordered pair of line families is drawn vertical/horizontal.
enum class ColorPair { alpha_beta, beta_gamma, gamma_alpha };

inline constexpr std::array<ColorPair, 3> kColorPairs = {
    ColorPair::alpha_beta, ColorPair::beta_gamma, ColorPair::gamma_alpha};

/// "ab", "bg", "ga".
std::string_view ascii_label(ColorPair p);
/// "αβ", "βγ", "γα".
std::string_view greek_label(ColorPair p);
/// Accepts either spelling; throws LabelError otherwise.
ColorPair parse_color_pair(std::string_view text);

/// A combinatorial triple grid diagram: n plus occupied cells, each holding
/// one point in its lower-left triangle. Every column, row and diagonal
/// class (col + row mod n) holds 0 or 2 points. Cells are kept sorted.
class CombinatorialTGD {
 public:
  CombinatorialTGD() = default;

  int grid_number() const { return n_; }
  /// b, half the number of points.
  int size() const { return static_cast<int>(cells_.size()) / 2; }
  const std::vector<Cell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

  friend bool operator==(const CombinatorialTGD&, const CombinatorialTGD&) = default;
  /// Orders by n, then lexicographically by sorted cell list.
  friend std::strong_ordering operator<=>(const CombinatorialTGD& a, const CombinatorialTGD& b);

 private:
  CombinatorialTGD(int n, std::vector<Cell> sorted_cells)
      : n_(n), cells_(std::move(sorted_cells)) {}

  int n_ = 1;
  std::vector<Cell> cells_;

  friend CombinatorialTGD validate_combinatorial(int n, std::span<const Cell> cells);
  friend CombinatorialTGD transform_unchecked(const CombinatorialTGD& d, std::vector<Cell> cells);
};

/// Reduces coordinates mod n, then checks distinctness and the three
/// line-count conditions (columns, then rows, then diagonals, ascending).
CombinatorialTGD validate_combinatorial(int n, std::span<const Cell> cells);

/// Internal: rebuild `d` with an already-valid image cell set (sorted here).
CombinatorialTGD transform_unchecked(const CombinatorialTGD& d, std::vector<Cell> cells);

/// A single two-family grid: every column and row holds 0 or 2 points.
class GridDiagram {
 public:
  GridDiagram() = default;
  /// Validates; throws DuplicateCell or LineCountViolation.
  GridDiagram(int n, std::vector<Cell> points, ColorPair label = ColorPair::alpha_beta);

  int grid_number() const { return n_; }
  const std::vector<Cell>& points() const { return points_; }
  ColorPair label() const { return label_; }
  int size() const { return static_cast<int>(points_.size()) / 2; }

  /// Same points and n; the label is metadata and not compared.
  friend bool operator==(const GridDiagram& a, const GridDiagram& b) {
    return a.n_ == b.n_ && a.points_ == b.points_;
  }

 private:
  int n_ = 1;
  std::vector<Cell> points_;
  ColorPair label_ = ColorPair::alpha_beta;
};

/// T(i, j) = (j, n - 1 - (i + j) mod n). Columns go to diagonals, rows to
/// columns and diagonals to rows; T has order 3.
Cell rotate_cell(int n, Cell c);
CombinatorialTGD rotate_colors(const CombinatorialTGD& d);
/// (i, j) -> (j, i); preserves diagonal classes.
CombinatorialTGD transpose(const CombinatorialTGD& d);
CombinatorialTGD translate(const CombinatorialTGD& d, int dcol, int drow);

/// The alpha-beta, beta-gamma and gamma-alpha grids, read off D, T(D), T^2(D).
std::array<GridDiagram, 3> three_grids(const CombinatorialTGD& d);

enum class SymmetryGroup { none, translations, translations_rotation, translations_rotation_reflection };

/// "none", "t", "tr", "trr".
std::string_view to_string(SymmetryGroup g);
SymmetryGroup parse_symmetry(std::string_view text);

/// Distinct images of d under the group, sorted.
std::vector<CombinatorialTGD> orbit(const CombinatorialTGD& d, SymmetryGroup g);
/// Lexicographically least element of the orbit.
CombinatorialTGD canonicalize(const CombinatorialTGD& d, SymmetryGroup g);

}  // namespace trigrid
