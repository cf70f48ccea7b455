#pragma once

#include <vector>

#include "trigrid/core.hpp"
#include "trigrid/link_diagram.hpp"

namespace trigrid {

enum class Compass { N, E, S, W };

const char* to_string(Compass c);

/// How a grid point's two segments leave it. After the clockwise 45 degree
/// rotation, {N, E} and {S, W} corners have vertical tangencies and become
/// cusps; a cusp is "down" when its vertical segment is traversed southward.
struct Corner {
  int vertex = 0;
  int component = 0;
  Compass vertical = Compass::N;
  Compass horizontal = Compass::E;
  bool cusp = false;
  bool down = false;  // meaningful only for cusps
};

struct CornerClassification {
  std::vector<Corner> corners;  // indexed by vertex
  int cusp_count() const;
};

CornerClassification cusp_census(const GridDiagram& g);
CornerClassification cusp_census(const PlanarLinkDiagram& p);

/// Per component: tb = self-writhe - cusps/2, rot = (down - up)/2.
struct LegendrianInvariants {
  int component = 0;
  int tb = 0;
  int rot = 0;
  int rot_abs = 0;
  int cusps = 0;
  int self_writhe = 0;
};

std::vector<LegendrianInvariants> legendrian_invariants(const GridDiagram& g);
std::vector<LegendrianInvariants> legendrian_invariants(const PlanarLinkDiagram& p);

/// Front coordinates of grid point (x, y) are (x + y, y - x).
struct FrontVertex {
  int x = 0;
  int y = 0;
  bool cusp = false;
  bool down = false;
};

struct FrontCrossing {
  int x = 0;
  int y = 0;
  int over_component = 0;
  int under_component = 0;
  int sign = 0;
};

/// One closed polyline per component, in traversal order.
struct FrontPolyline {
  int component = 0;
  std::vector<FrontVertex> vertices;
};

struct Front {
  std::vector<FrontPolyline> polylines;
  std::vector<FrontCrossing> crossings;
};

Front front_polyline(const GridDiagram& g);

}  // namespace trigrid
