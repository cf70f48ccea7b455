#include "trigrid/legendrian.hpp"

namespace trigrid {

const char* to_string(Compass c) {
  switch (c) {
    case Compass::N: return "N";
    case Compass::E: return "E";
    case Compass::S: return "S";
    case Compass::W: return "W";
  }
  return "?";
}

int CornerClassification::cusp_count() const {
  int k = 0;
  for (const Corner& c : corners) k += c.cusp;
  return k;
}

CornerClassification cusp_census(const PlanarLinkDiagram& p) {
  CornerClassification out;
  out.corners.resize(p.grid.points().size());
  for (const Segment& s : p.segments) {
    // The segment leaves from_vertex towards `to` and to_vertex towards `from`.
    Corner& a = out.corners[s.from_vertex];
    Corner& b = out.corners[s.to_vertex];
    a.vertex = s.from_vertex;
    b.vertex = s.to_vertex;
    a.component = b.component = s.component;
    const bool up_or_east = s.to > s.from;
    if (s.horizontal) {
      a.horizontal = up_or_east ? Compass::E : Compass::W;
      b.horizontal = up_or_east ? Compass::W : Compass::E;
    } else {
      a.vertical = up_or_east ? Compass::N : Compass::S;
      b.vertical = up_or_east ? Compass::S : Compass::N;
    }
  }
  for (const Segment& s : p.segments) {
    if (s.horizontal) continue;
    const bool southward = s.to < s.from;
    for (int v : {s.from_vertex, s.to_vertex}) {
      Corner& c = out.corners[v];
      c.cusp = (c.vertical == Compass::N && c.horizontal == Compass::E) ||
               (c.vertical == Compass::S && c.horizontal == Compass::W);
      c.down = c.cusp && southward;
    }
  }
  return out;
}

CornerClassification cusp_census(const GridDiagram& g) { return cusp_census(planar_diagram(g)); }

std::vector<LegendrianInvariants> legendrian_invariants(const PlanarLinkDiagram& p) {
  const CornerClassification cc = cusp_census(p);
  std::vector<LegendrianInvariants> out(p.component_count());
  std::vector<int> down(p.component_count(), 0), up(p.component_count(), 0);
  for (const Corner& c : cc.corners) {
    if (!c.cusp) continue;
    ++out[c.component].cusps;
    ++(c.down ? down : up)[c.component];
  }
  for (int k = 0; k < p.component_count(); ++k) {
    LegendrianInvariants& li = out[k];
    li.component = k;
    li.self_writhe = p.self_writhe(k);
    li.tb = li.self_writhe - li.cusps / 2;
    li.rot = (down[k] - up[k]) / 2;
    li.rot_abs = li.rot < 0 ? -li.rot : li.rot;
  }
  return out;
}

std::vector<LegendrianInvariants> legendrian_invariants(const GridDiagram& g) {
  return legendrian_invariants(planar_diagram(g));
}

Front front_polyline(const GridDiagram& g) {
  const PlanarLinkDiagram p = planar_diagram(g);
  const CornerClassification cc = cusp_census(p);
  Front f;
  for (int k = 0; k < p.component_count(); ++k) {
    FrontPolyline pl;
    pl.component = k;
    for (int v : p.components[k].vertices) {
      const Cell c = g.points()[v];
      pl.vertices.push_back({c.col + c.row, c.row - c.col, cc.corners[v].cusp, cc.corners[v].down});
    }
    f.polylines.push_back(std::move(pl));
  }
  for (const Crossing& x : p.crossings)
    f.crossings.push_back({x.col + x.row, x.row - x.col, p.segments[x.over].component,
                           p.segments[x.under].component, x.sign});
  return f;
}

}  // namespace trigrid
