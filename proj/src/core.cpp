#include "trigrid/core.hpp"

#include <algorithm>

namespace trigrid {

const char* to_string(LineDirection d) {
  switch (d) {
    case LineDirection::column: return "column";
    case LineDirection::row: return "row";
    case LineDirection::diagonal: return "diagonal";
  }
  return "?";
}

DuplicateCell::DuplicateCell(int c, int r)
    : ValidationError("duplicate cell (" + std::to_string(c) + ", " + std::to_string(r) + ")"),
      col(c),
      row(r) {}

LineCountViolation::LineCountViolation(LineDirection dir, int idx, int cnt)
    : ValidationError(std::string(to_string(dir)) + " " + std::to_string(idx) + " holds " +
                      std::to_string(cnt) + " points (expected 0 or 2)"),
      direction(dir),
      index(idx),
      count(cnt) {}

DuplicatePoint::DuplicatePoint(std::string px, std::string py)
    : ValidationError("duplicate point (" + px + ", " + py + ")"), x(std::move(px)), y(std::move(py)) {}

UnpairedPoint::UnpairedPoint(LineDirection dir, std::string v, int cnt)
    : ValidationError(std::string(to_string(dir)) + " line " + v + " holds " + std::to_string(cnt) +
                      " points (expected 0 or 2)"),
      direction(dir),
      value(std::move(v)),
      count(cnt) {}

TooManyCrossings::TooManyCrossings(int c, int b)
    : Error("diagram has " + std::to_string(c) + " crossings, bound is " + std::to_string(b)),
      crossings(c),
      bound(b) {}

SchemaError::SchemaError(std::string loc, const std::string& what)
    : Error(loc + ": " + what), location(std::move(loc)) {}

std::string_view ascii_label(ColorPair p) {
  switch (p) {
    case ColorPair::alpha_beta: return "ab";
    case ColorPair::beta_gamma: return "bg";
    case ColorPair::gamma_alpha: return "ga";
  }
  return "?";
}

std::string_view greek_label(ColorPair p) {
  switch (p) {
    case ColorPair::alpha_beta: return "αβ";
    case ColorPair::beta_gamma: return "βγ";
    case ColorPair::gamma_alpha: return "γα";
  }
  return "?";
}

ColorPair parse_color_pair(std::string_view text) {
  for (ColorPair p : kColorPairs)
    if (text == ascii_label(p) || text == greek_label(p)) return p;
  throw LabelError("unknown color pair label '" + std::string(text) + "' (expected ab, bg or ga)");
}

std::strong_ordering operator<=>(const CombinatorialTGD& a, const CombinatorialTGD& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.cells_.begin(), a.cells_.end(), b.cells_.begin(),
                                                b.cells_.end());
}

namespace {

int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

void check_counts(const std::vector<int>& counts, LineDirection dir) {
  for (int i = 0; i < static_cast<int>(counts.size()); ++i)
    if (counts[i] != 0 && counts[i] != 2) throw LineCountViolation(dir, i, counts[i]);
}

}  // namespace

CombinatorialTGD validate_combinatorial(int n, std::span<const Cell> cells) {
  if (n < 1) throw InvalidParameter("grid number must be positive, got " + std::to_string(n));
  std::vector<Cell> reduced;
  reduced.reserve(cells.size());
  for (Cell c : cells) reduced.push_back({mod(c.col, n), mod(c.row, n)});
  std::sort(reduced.begin(), reduced.end());
  if (auto it = std::adjacent_find(reduced.begin(), reduced.end()); it != reduced.end())
    throw DuplicateCell(it->col, it->row);

  std::vector<int> cols(n), rows(n), diags(n);
  for (Cell c : reduced) {
    ++cols[c.col];
    ++rows[c.row];
    ++diags[(c.col + c.row) % n];
  }
  check_counts(cols, LineDirection::column);
  check_counts(rows, LineDirection::row);
  check_counts(diags, LineDirection::diagonal);
  return CombinatorialTGD(n, std::move(reduced));
}

CombinatorialTGD transform_unchecked(const CombinatorialTGD& d, std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  return CombinatorialTGD(d.grid_number(), std::move(cells));
}

GridDiagram::GridDiagram(int n, std::vector<Cell> points, ColorPair label)
    : n_(n), points_(std::move(points)), label_(label) {
  if (n < 1) throw InvalidParameter("grid number must be positive, got " + std::to_string(n));
  for (Cell& c : points_) c = {mod(c.col, n), mod(c.row, n)};
  std::sort(points_.begin(), points_.end());
  if (auto it = std::adjacent_find(points_.begin(), points_.end()); it != points_.end())
    throw DuplicateCell(it->col, it->row);
  std::vector<int> cols(n), rows(n);
  for (Cell c : points_) {
    ++cols[c.col];
    ++rows[c.row];
  }
  check_counts(cols, LineDirection::column);
  check_counts(rows, LineDirection::row);
}

Cell rotate_cell(int n, Cell c) { return {c.row, mod(n - 1 - (c.col + c.row), n)}; }

namespace {

template <typename F>
CombinatorialTGD map_cells(const CombinatorialTGD& d, F&& f) {
  std::vector<Cell> out;
  out.reserve(d.cells().size());
  for (Cell c : d.cells()) out.push_back(f(c));
  return transform_unchecked(d, std::move(out));
}

}  // namespace

CombinatorialTGD rotate_colors(const CombinatorialTGD& d) {
  const int n = d.grid_number();
  return map_cells(d, [n](Cell c) { return rotate_cell(n, c); });
}

CombinatorialTGD transpose(const CombinatorialTGD& d) {
  return map_cells(d, [](Cell c) { return Cell{c.row, c.col}; });
}

CombinatorialTGD translate(const CombinatorialTGD& d, int dcol, int drow) {
  const int n = d.grid_number();
  return map_cells(d, [=](Cell c) { return Cell{mod(c.col + dcol, n), mod(c.row + drow, n)}; });
}

std::array<GridDiagram, 3> three_grids(const CombinatorialTGD& d) {
  const CombinatorialTGD r1 = rotate_colors(d);
  const CombinatorialTGD r2 = rotate_colors(r1);
  const int n = d.grid_number();
  return {GridDiagram(n, d.cells(), ColorPair::alpha_beta),
          GridDiagram(n, r1.cells(), ColorPair::beta_gamma),
          GridDiagram(n, r2.cells(), ColorPair::gamma_alpha)};
}

std::string_view to_string(SymmetryGroup g) {
  switch (g) {
    case SymmetryGroup::none: return "none";
    case SymmetryGroup::translations: return "t";
    case SymmetryGroup::translations_rotation: return "tr";
    case SymmetryGroup::translations_rotation_reflection: return "trr";
  }
  return "?";
}

SymmetryGroup parse_symmetry(std::string_view text) {
  if (text == "none") return SymmetryGroup::none;
  if (text == "t" || text == "translations") return SymmetryGroup::translations;
  if (text == "tr" || text == "translations-and-rotation") return SymmetryGroup::translations_rotation;
  if (text == "trr" || text == "translations-rotation-reflection")
    return SymmetryGroup::translations_rotation_reflection;
  throw InvalidParameter("unknown symmetry group '" + std::string(text) + "' (expected none, t, tr or trr)");
}

namespace {

// Point-group part: {id}, {id, T, T^2} or {T^k, transpose T^k}. Together with
// the translations this is closed, since conjugating a translation by T or the
// transpose gives a translation and transpose T transpose = T^2.
std::vector<CombinatorialTGD> linear_images(const CombinatorialTGD& d, SymmetryGroup g) {
  std::vector<CombinatorialTGD> out{d};
  if (g == SymmetryGroup::translations_rotation || g == SymmetryGroup::translations_rotation_reflection) {
    out.push_back(rotate_colors(out[0]));
    out.push_back(rotate_colors(out[1]));
  }
  if (g == SymmetryGroup::translations_rotation_reflection) {
    for (std::size_t i = 0, m = out.size(); i < m; ++i) out.push_back(transpose(out[i]));
  }
  return out;
}

}  // namespace

std::vector<CombinatorialTGD> orbit(const CombinatorialTGD& d, SymmetryGroup g) {
  std::vector<CombinatorialTGD> out;
  const int n = d.grid_number();
  for (const CombinatorialTGD& base : linear_images(d, g)) {
    if (g == SymmetryGroup::none) {
      out.push_back(base);
      continue;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) out.push_back(translate(base, a, b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CombinatorialTGD canonicalize(const CombinatorialTGD& d, SymmetryGroup g) {
  if (g == SymmetryGroup::none) return d;
  const int n = d.grid_number();
  CombinatorialTGD best = d;
  std::vector<Cell> buf(d.cells().size());
  for (const CombinatorialTGD& base : linear_images(d, g)) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const auto& src = base.cells();
        for (std::size_t i = 0; i < src.size(); ++i)
          buf[i] = {(src[i].col + a) % n, (src[i].row + b) % n};
        std::sort(buf.begin(), buf.end());
        if (std::lexicographical_compare(buf.begin(), buf.end(), best.cells().begin(), best.cells().end()))
          best = transform_unchecked(d, buf);
      }
    }
  }
  return best;
}

}  // namespace trigrid
