#pragma once

#include <array>
#include <string>
#include <vector>

#include "trigrid/core.hpp"
#include "trigrid/laurent.hpp"

namespace trigrid {

inline constexpr int kDefaultCrossingBound = 24;

/// A straight segment joining two line partners, oriented by traversal.
/// `line` is the row of a horizontal segment or the column of a vertical one;
/// `from`/`to` are the varying coordinate at its start and end.
struct Segment {
  int component = 0;
  bool horizontal = false;
  int line = 0;
  int from = 0;
  int to = 0;
  int from_vertex = 0;
  int to_vertex = 0;

  int direction() const { return to > from ? 1 : -1; }
  bool strictly_spans(int v) const { return (from < v && v < to) || (to < v && v < from); }
};

/// Horizontal segment `over` passes over vertical segment `under` at (col, row).
struct Crossing {
  int over = 0;
  int under = 0;
  int col = 0;
  int row = 0;
  int sign = 0;
};

/// Vertex indices in traversal order, and segment i runs vertices[i] -> vertices[i+1].
struct LinkComponent {
  std::vector<int> vertices;
  std::vector<int> segments;
};

/// The link diagram of a grid: partners joined inside [0, n) x [0, n),
/// horizontal over vertical. Vertex i is grid.points()[i]. Each component is
/// traversed from its least vertex, first along its vertical segment (which
/// then points up); components are ordered by least vertex.
struct PlanarLinkDiagram {
  GridDiagram grid;
  std::vector<Segment> segments;
  std::vector<Crossing> crossings;
  std::vector<LinkComponent> components;

  int component_count() const { return static_cast<int>(components.size()); }
  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int writhe() const;
  int self_writhe(int component) const;
};

PlanarLinkDiagram planar_diagram(const GridDiagram& g);

struct ComponentCensusEntry {
  int component = 0;
  int vertices = 0;
  int segments = 0;
};

std::vector<ComponentCensusEntry> component_census(const PlanarLinkDiagram& p);

/// Off-diagonal: linking numbers; diagonal: self-writhe.
std::vector<std::vector<int>> linking_matrix(const PlanarLinkDiagram& p);

/// The grid restricted to one component's points.
GridDiagram component_grid(const PlanarLinkDiagram& p, int component);

/// Crossings as X[a, b, c, d]: arc labels counterclockwise starting from an
/// under-strand end. Closed components without crossings are `free_loops`.
struct PdCode {
  std::vector<std::array<int, 4>> crossings;
  int arc_count = 0;
  int free_loops = 0;
};

PdCode pd_code(const PlanarLinkDiagram& p);

/// State sum with <X[a,b,c,d]> = A <(ab)(cd)> + A^-1 <(ad)(bc)> and loop
/// value -A^2 - A^-2, normalized so a single circle has bracket 1.
/// The empty diagram is given bracket 1. `jobs` threads split the states.
LaurentPolynomial kauffman_bracket(const PdCode& pd, int jobs = 1);
/// Throws TooManyCrossings past `crossing_bound`.
LaurentPolynomial kauffman_bracket(const PlanarLinkDiagram& p, int crossing_bound = kDefaultCrossingBound,
                                   int jobs = 1);

/// Writhe-normalized bracket (-A^3)^-w <D>, the Jones polynomial in A.
LaurentPolynomial jones_in_a(const PlanarLinkDiagram& p, int crossing_bound = kDefaultCrossingBound,
                             int jobs = 1);

/// (-A^2 - A^-2)^(c-1); 1 for c = 0.
LaurentPolynomial unlink_value(int components);

enum class UnlinkVerdict { certified_unlink_heuristic, not_unlink, inconclusive };

const char* to_string(UnlinkVerdict v);

struct UnlinkCertificate {
  UnlinkVerdict verdict = UnlinkVerdict::inconclusive;
  std::string reason;
};

/// Heuristic: Jones-type agreement with the unlink is necessary, not
/// sufficient. not_unlink is a proof; certified_unlink_heuristic is not.
/// Throws TooManyCrossings.
UnlinkCertificate unlink_certificate(const PlanarLinkDiagram& p, int crossing_bound = kDefaultCrossingBound,
                                     int jobs = 1);

/// Translates every point by (a, b) mod n.
GridDiagram cyclic_permute(const GridDiagram& g, int a, int b);

}  // namespace trigrid
