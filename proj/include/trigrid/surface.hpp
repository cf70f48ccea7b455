#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigrid/core.hpp"
#include "trigrid/geometric.hpp"
#include "trigrid/legendrian.hpp"
#include "trigrid/link_diagram.hpp"

namespace trigrid {

enum class EdgeColor { alpha = 0, beta = 1, gamma = 2 };

/// Gamma(D): one vertex per point (indexed like D.cells()); each vertex has
/// exactly one alpha (column), beta (row) and gamma (diagonal) neighbour.
/// Parallel edges occur when two points share two line classes.
struct ColoredCubicGraph {
  std::vector<std::array<int, 3>> neighbor;
  std::vector<int> component_of;
  int component_count = 0;

  int vertex_count() const { return static_cast<int>(neighbor.size()); }
  int next(int v, EdgeColor c) const { return neighbor[v][static_cast<int>(c)]; }
};

ColoredCubicGraph graph_of(const CombinatorialTGD& d);
/// Same graph from the stored column/row/diagonal pairings.
ColoredCubicGraph graph_of(const GeometricTGD& g);

/// Proper 2-colouring by BFS.
bool is_bipartite(const ColoredCubicGraph& g);

enum class Mark { X, O };

/// One X and one O on every occupied column, row and diagonal, found by
/// propagating line constraints; nullopt when none exists.
std::optional<std::vector<Mark>> xo_placement(const CombinatorialTGD& d);

/// S^2, #^g T^2 (g >= 1) or #^k RP^2 (k >= 1).
struct SurfaceName {
  bool orientable = true;
  int parameter = 0;  // genus g, or crosscap number k

  static SurfaceName from_euler(bool orientable, int euler);
  std::string to_string() const;
  friend bool operator==(const SurfaceName&, const SurfaceName&) = default;
};

struct SurfaceComponent {
  std::vector<int> vertices;  // ascending; the least one identifies the component
  int V = 0;
  int E = 0;
  int F = 0;
  std::array<int, 3> faces{};  // (c1, c2, c3): alpha-beta, beta-gamma, gamma-alpha cycles
  int euler = 0;
  bool orientable = true;
  SurfaceName name;
};

/// Per Gamma-component classification of the capped-off ribbon surface,
/// ordered by least vertex, plus whole-diagram totals.
struct SurfaceReport {
  int b = 0;
  std::vector<SurfaceComponent> components;
  int V = 0;
  int E = 0;
  int F = 0;
  std::array<int, 3> faces{};
  int euler = 0;
  bool orientable = true;

  bool connected() const { return components.size() == 1; }
  /// "RP^2", "T^2", or "RP^2 + RP^2 + ..." for several components; "empty".
  std::string name() const;
};

SurfaceReport classify(const ColoredCubicGraph& g);
SurfaceReport classify(const CombinatorialTGD& d);
SurfaceReport classify(const GeometricTGD& g);

enum class FillabilityStatus { invalid, general, simple, immersed_eligible, lagrangian_eligible };

const char* to_string(FillabilityStatus s);

struct GridEvidence {
  ColorPair label = ColorPair::alpha_beta;
  int components = 0;
  int crossings = 0;
  UnlinkVerdict verdict = UnlinkVerdict::inconclusive;
  std::string reason;
  std::vector<LegendrianInvariants> invariants;
};

/// Precedence: lagrangian-eligible, simple, immersed-eligible, general.
/// Unlink certification is Jones-based and therefore heuristic.
struct FillabilityReport {
  FillabilityStatus status = FillabilityStatus::general;
  bool all_unlink = false;
  bool all_tb_minus_one = false;
  bool all_rot_zero = false;
  std::array<GridEvidence, 3> grids;
  std::vector<std::string> notes;
};

FillabilityReport fillability_status(const std::array<GridDiagram, 3>& grids,
                                     int crossing_bound = kDefaultCrossingBound, int jobs = 1);
FillabilityReport fillability_status(const CombinatorialTGD& d, int crossing_bound = kDefaultCrossingBound,
                                     int jobs = 1);

/// #^k RP^2 embeds as a Lagrangian in CP^2 iff k = 1 mod 4, or k = 2 mod 4 with k != 2.
bool rp2_embeddable(int k);

struct ObstructionVerdict {
  bool fires = false;
  ColorPair unfillable = ColorPair::gamma_alpha;  // the third link
  int q = 0;                                      // c1 + c2 + c3 - b
  bool nonorientable = false;
  std::string message;
  std::vector<std::string> warnings;
};

/// Claims are caller-supplied (not verified): the two named links admit
/// Lagrangian slice-disk fillings. Throws LabelError unless the labels are
/// two distinct pairs.
ObstructionVerdict obstruction_report(const CombinatorialTGD& d, ColorPair first, ColorPair second);
ObstructionVerdict obstruction_report(const CombinatorialTGD& d, std::string_view claims);

/// Everything the CLI and enumeration filters need about one diagram.
struct DiagramAnalysis {
  SurfaceReport surface;
  FillabilityReport fillability;
  std::vector<std::string> red_flags;
};

DiagramAnalysis analyze(const CombinatorialTGD& d, int crossing_bound = kDefaultCrossingBound, int jobs = 1);
DiagramAnalysis analyze(const GeometricTGD& g, int crossing_bound = kDefaultCrossingBound, int jobs = 1);

}  // namespace trigrid
