#include "trigrid/surface.hpp"

#include <algorithm>
#include <queue>

namespace trigrid {

namespace {

void label_components(ColoredCubicGraph& g) {
  const int m = g.vertex_count();
  g.component_of.assign(m, -1);
  for (int s = 0; s < m; ++s) {
    if (g.component_of[s] != -1) continue;
    const int id = g.component_count++;
    std::vector<int> stack{s};
    g.component_of[s] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbor[v])
        if (g.component_of[w] == -1) {
          g.component_of[w] = id;
          stack.push_back(w);
        }
    }
  }
}

}  // namespace

ColoredCubicGraph graph_of(const CombinatorialTGD& d) {
  const int n = d.grid_number();
  const auto& cells = d.cells();
  const int m = static_cast<int>(cells.size());
  ColoredCubicGraph g;
  g.neighbor.assign(m, {-1, -1, -1});

  std::array<std::vector<std::vector<int>>, 3> lines;
  for (auto& l : lines) l.assign(n, {});
  for (int i = 0; i < m; ++i) {
    lines[0][cells[i].col].push_back(i);
    lines[1][cells[i].row].push_back(i);
    lines[2][(cells[i].col + cells[i].row) % n].push_back(i);
  }
  for (int c = 0; c < 3; ++c)
    for (const auto& pair : lines[c])
      if (pair.size() == 2) {
        g.neighbor[pair[0]][c] = pair[1];
        g.neighbor[pair[1]][c] = pair[0];
      }

  label_components(g);
  return g;
}

ColoredCubicGraph graph_of(const GeometricTGD& geo) {
  ColoredCubicGraph g;
  const int m = static_cast<int>(geo.points().size());
  g.neighbor.resize(m);
  for (int v = 0; v < m; ++v)
    for (int c = 0; c < 3; ++c) g.neighbor[v][c] = geo.partner(static_cast<LineDirection>(c), v);
  label_components(g);
  return g;
}

bool is_bipartite(const ColoredCubicGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbor[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::vector<Mark>> xo_placement(const CombinatorialTGD& d) {
  const int n = d.grid_number();
  const auto& cells = d.cells();
  const int m = static_cast<int>(cells.size());

  // Every occupied line as the pair of point indices on it.
  std::vector<std::pair<int, int>> lines;
  for (int dir = 0; dir < 3; ++dir) {
    std::vector<std::vector<int>> on(n);
    for (int i = 0; i < m; ++i) {
      const Cell c = cells[i];
      on[dir == 0 ? c.col : dir == 1 ? c.row : (c.col + c.row) % n].push_back(i);
    }
    for (const auto& l : on)
      if (l.size() == 2) lines.emplace_back(l[0], l[1]);
  }

  std::vector<std::optional<Mark>> mark(m);
  auto opposite = [](Mark k) { return k == Mark::X ? Mark::O : Mark::X; };
  for (int seed = 0; seed < m; ++seed) {
    if (mark[seed]) continue;
    mark[seed] = Mark::X;  // free choice per connected piece
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto [a, b] : lines) {
        if (mark[a] && mark[b]) {
          if (*mark[a] == *mark[b]) return std::nullopt;
        } else if (mark[a]) {
          mark[b] = opposite(*mark[a]);
          changed = true;
        } else if (mark[b]) {
          mark[a] = opposite(*mark[b]);
          changed = true;
        }
      }
    }
  }
  std::vector<Mark> out;
  out.reserve(m);
  for (const auto& k : mark) out.push_back(*k);
  return out;
}

SurfaceName SurfaceName::from_euler(bool orientable, int euler) {
  return orientable ? SurfaceName{true, (2 - euler) / 2} : SurfaceName{false, 2 - euler};
}

std::string SurfaceName::to_string() const {
  if (orientable) {
    if (parameter == 0) return "S^2";
    if (parameter == 1) return "T^2";
    return "#^" + std::to_string(parameter) + " T^2";
  }
  if (parameter == 1) return "RP^2";
  return "#^" + std::to_string(parameter) + " RP^2";
}

std::string SurfaceReport::name() const {
  if (components.empty()) return "empty";
  std::string s;
  for (const auto& c : components) {
    if (!s.empty()) s += " + ";
    s += c.name.to_string();
  }
  return s;
}

SurfaceReport classify(const CombinatorialTGD& d) { return classify(graph_of(d)); }

SurfaceReport classify(const GeometricTGD& g) { return classify(graph_of(g)); }

SurfaceReport classify(const ColoredCubicGraph& g) {
  SurfaceReport r;
  r.b = g.vertex_count() / 2;
  r.components.resize(g.component_count);
  for (int v = 0; v < g.vertex_count(); ++v) r.components[g.component_of[v]].vertices.push_back(v);

  constexpr std::array<std::pair<EdgeColor, EdgeColor>, 3> kPairs = {{
      {EdgeColor::alpha, EdgeColor::beta},
      {EdgeColor::beta, EdgeColor::gamma},
      {EdgeColor::gamma, EdgeColor::alpha},
  }};
  for (int p = 0; p < 3; ++p) {
    std::vector<bool> seen(g.vertex_count(), false);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (seen[v]) continue;
      int u = v;
      do {
        seen[u] = true;
        const int w = g.next(u, kPairs[p].first);
        seen[w] = true;
        u = g.next(w, kPairs[p].second);
      } while (u != v);
      ++r.components[g.component_of[v]].faces[p];
    }
  }

  // Orientability per component: a proper 2-colouring restricted to it.
  std::vector<int> side(g.vertex_count(), -1);
  for (auto& c : r.components) {
    c.V = static_cast<int>(c.vertices.size());
    c.E = 3 * c.V / 2;
    c.F = c.faces[0] + c.faces[1] + c.faces[2];
    c.euler = c.V - c.E + c.F;
    std::vector<int> stack{c.vertices.front()};
    side[c.vertices.front()] = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbor[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          c.orientable = false;
        }
      }
    }
    c.name = SurfaceName::from_euler(c.orientable, c.euler);
    r.V += c.V;
    r.E += c.E;
    r.F += c.F;
    for (int p = 0; p < 3; ++p) r.faces[p] += c.faces[p];
    r.orientable = r.orientable && c.orientable;
  }
  r.euler = r.V - r.E + r.F;
  return r;
}

const char* to_string(FillabilityStatus s) {
  switch (s) {
    case FillabilityStatus::invalid: return "invalid";
    case FillabilityStatus::general: return "general";
    case FillabilityStatus::simple: return "simple";
    case FillabilityStatus::immersed_eligible: return "immersed-eligible";
    case FillabilityStatus::lagrangian_eligible: return "lagrangian-eligible";
  }
  return "?";
}

FillabilityReport fillability_status(const CombinatorialTGD& d, int crossing_bound, int jobs) {
  return fillability_status(three_grids(d), crossing_bound, jobs);
}

FillabilityReport fillability_status(const std::array<GridDiagram, 3>& grids, int crossing_bound, int jobs) {
  FillabilityReport r;
  r.all_unlink = r.all_tb_minus_one = r.all_rot_zero = true;
  for (int k = 0; k < 3; ++k) {
    const PlanarLinkDiagram p = planar_diagram(grids[k]);
    GridEvidence& ev = r.grids[k];
    ev.label = grids[k].label();
    ev.components = p.component_count();
    ev.crossings = p.crossing_count();
    ev.invariants = legendrian_invariants(p);
    try {
      const UnlinkCertificate cert = unlink_certificate(p, crossing_bound, jobs);
      ev.verdict = cert.verdict;
      ev.reason = cert.reason;
    } catch (const TooManyCrossings& e) {
      ev.verdict = UnlinkVerdict::inconclusive;
      ev.reason = e.what();
    }
    r.all_unlink = r.all_unlink && ev.verdict == UnlinkVerdict::certified_unlink_heuristic;
    for (const LegendrianInvariants& li : ev.invariants) {
      r.all_tb_minus_one = r.all_tb_minus_one && li.tb == -1;
      r.all_rot_zero = r.all_rot_zero && li.rot == 0;
      if (ev.verdict == UnlinkVerdict::certified_unlink_heuristic && li.tb + li.rot_abs > -1)
        r.notes.push_back("internal error: " + std::string(greek_label(ev.label)) + " component " +
                          std::to_string(li.component) + " violates tb + |rot| <= -1 for an unknot");
    }
  }
  if (r.all_unlink && r.all_tb_minus_one)
    r.status = FillabilityStatus::lagrangian_eligible;
  else if (r.all_unlink)
    r.status = FillabilityStatus::simple;
  else if (r.all_rot_zero)
    r.status = FillabilityStatus::immersed_eligible;
  else
    r.status = FillabilityStatus::general;
  if (r.all_unlink) r.notes.push_back("unlink certification is heuristic (Jones-type invariants)");
  return r;
}

bool rp2_embeddable(int k) {
  if (k < 1) throw InvalidParameter("crosscap number must be positive");
  return k % 4 == 1 || (k % 4 == 2 && k != 2);
}

ObstructionVerdict obstruction_report(const CombinatorialTGD& d, ColorPair first, ColorPair second) {
  if (first == second) throw LabelError("the two claimed fillable links must be distinct");
  ObstructionVerdict v;
  for (ColorPair p : kColorPairs)
    if (p != first && p != second) v.unfillable = p;

  const SurfaceReport s = classify(d);
  v.q = s.faces[0] + s.faces[1] + s.faces[2] - s.b;
  v.nonorientable = !s.orientable;
  if (!s.connected())
    v.warnings.push_back("Gamma(D) has " + std::to_string(s.components.size()) +
                         " components; the criterion concerns a connected surface");

  const int residue = ((v.q % 4) + 4) % 4;
  const bool euler_ok = v.q == 0 || (v.q < 0 && (residue == 2 || residue == 3));
  const std::string third(greek_label(v.unfillable));
  if (!v.nonorientable) {
    v.message = "hypothesis fails: diagram is orientable";
  } else if (!euler_ok) {
    v.message = "hypothesis fails: c1 + c2 + c3 - b = " + std::to_string(v.q) +
                " is neither 0 nor negative and 2 or 3 mod 4";
  } else {
    v.fires = true;
    v.message = third + " not slice-disk fillable (conditional on the " + std::string(greek_label(first)) +
                " and " + std::string(greek_label(second)) + " claims)";
  }
  return v;
}

ObstructionVerdict obstruction_report(const CombinatorialTGD& d, std::string_view claims) {
  const auto comma = claims.find(',');
  if (comma == std::string_view::npos || claims.find(',', comma + 1) != std::string_view::npos)
    throw LabelError("expected two comma-separated labels, got '" + std::string(claims) + "'");
  return obstruction_report(d, parse_color_pair(claims.substr(0, comma)), parse_color_pair(claims.substr(comma + 1)));
}

namespace {

DiagramAnalysis analyze_parts(SurfaceReport surface, FillabilityReport fill) {
  DiagramAnalysis a{std::move(surface), std::move(fill), {}};
  if (a.fillability.status == FillabilityStatus::lagrangian_eligible) {
    for (const auto& c : a.surface.components)
      if (c.orientable && c.euler != 0)
        a.red_flags.push_back("orientable lagrangian-eligible component with euler characteristic " +
                              std::to_string(c.euler) + " (only T^2 is expected)");
  }
  for (const auto& note : a.fillability.notes)
    if (note.rfind("internal error", 0) == 0) a.red_flags.push_back(note);
  return a;
}

}  // namespace

DiagramAnalysis analyze(const CombinatorialTGD& d, int crossing_bound, int jobs) {
  return analyze_parts(classify(d), fillability_status(d, crossing_bound, jobs));
}

DiagramAnalysis analyze(const GeometricTGD& g, int crossing_bound, int jobs) {
  return analyze_parts(classify(g), fillability_status(geometric_grids(g), crossing_bound, jobs));
}

}  // namespace trigrid
