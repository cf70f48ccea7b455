#include "trigrid/link_diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <thread>
#include <tuple>
#include <bit>

namespace trigrid {

int PlanarLinkDiagram::writhe() const {
  int w = 0;
  for (const Crossing& x : crossings) w += x.sign;
  return w;
}

int PlanarLinkDiagram::self_writhe(int component) const {
  int w = 0;
  for (const Crossing& x : crossings)
    if (segments[x.over].component == component && segments[x.under].component == component) w += x.sign;
  return w;
}

PlanarLinkDiagram planar_diagram(const GridDiagram& g) {
  PlanarLinkDiagram p{g, {}, {}, {}};
  const auto& pts = g.points();
  const int m = static_cast<int>(pts.size());
  const int n = g.grid_number();

  std::vector<std::vector<int>> by_col(n), by_row(n);
  for (int i = 0; i < m; ++i) {
    by_col[pts[i].col].push_back(i);
    by_row[pts[i].row].push_back(i);
  }
  auto col_partner = [&](int v) {
    const auto& c = by_col[pts[v].col];
    return c[0] == v ? c[1] : c[0];
  };
  auto row_partner = [&](int v) {
    const auto& r = by_row[pts[v].row];
    return r[0] == v ? r[1] : r[0];
  };

  std::vector<bool> seen(m, false);
  for (int start = 0; start < m; ++start) {
    if (seen[start]) continue;
    const int comp = static_cast<int>(p.components.size());
    LinkComponent lc;
    int v = start;
    bool vertical = true;
    do {
      seen[v] = true;
      lc.vertices.push_back(v);
      const int w = vertical ? col_partner(v) : row_partner(v);
      Segment s;
      s.component = comp;
      s.horizontal = !vertical;
      s.line = vertical ? pts[v].col : pts[v].row;
      s.from = vertical ? pts[v].row : pts[v].col;
      s.to = vertical ? pts[w].row : pts[w].col;
      s.from_vertex = v;
      s.to_vertex = w;
      lc.segments.push_back(static_cast<int>(p.segments.size()));
      p.segments.push_back(s);
      v = w;
      vertical = !vertical;
    } while (!(v == start && vertical));
    p.components.push_back(std::move(lc));
  }

  for (int h = 0; h < static_cast<int>(p.segments.size()); ++h) {
    const Segment& hs = p.segments[h];
    if (!hs.horizontal) continue;
    for (int u = 0; u < static_cast<int>(p.segments.size()); ++u) {
      const Segment& vs = p.segments[u];
      if (vs.horizontal) continue;
      if (hs.strictly_spans(vs.line) && vs.strictly_spans(hs.line)) {
        // (over, under) = ((dx, 0), (0, dy)) is positive iff dx * dy > 0.
        p.crossings.push_back({h, u, vs.line, hs.line, hs.direction() * vs.direction()});
      }
    }
  }
  std::sort(p.crossings.begin(), p.crossings.end(), [](const Crossing& a, const Crossing& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  return p;
}

std::vector<ComponentCensusEntry> component_census(const PlanarLinkDiagram& p) {
  std::vector<ComponentCensusEntry> out;
  for (int c = 0; c < p.component_count(); ++c) {
    const auto& lc = p.components[c];
    out.push_back({c, static_cast<int>(lc.vertices.size()), static_cast<int>(lc.segments.size())});
  }
  return out;
}

std::vector<std::vector<int>> linking_matrix(const PlanarLinkDiagram& p) {
  const int c = p.component_count();
  std::vector<std::vector<int>> twice(c, std::vector<int>(c, 0));
  for (const Crossing& x : p.crossings) {
    const int a = p.segments[x.over].component;
    const int b = p.segments[x.under].component;
    if (a == b) {
      twice[a][a] += 2 * x.sign;
    } else {
      twice[a][b] += x.sign;
      twice[b][a] += x.sign;
    }
  }
  for (auto& row : twice)
    for (int& v : row) v /= 2;
  return twice;
}

GridDiagram component_grid(const PlanarLinkDiagram& p, int component) {
  std::vector<Cell> pts;
  for (int v : p.components.at(component).vertices) pts.push_back(p.grid.points()[v]);
  return GridDiagram(p.grid.grid_number(), std::move(pts), p.grid.label());
}

PdCode pd_code(const PlanarLinkDiagram& p) {
  struct Passage {
    int crossing;
    bool over;
  };
  PdCode pd;
  pd.crossings.assign(p.crossings.size(), {-1, -1, -1, -1});

  std::vector<std::vector<int>> on_segment(p.segments.size());
  for (int k = 0; k < p.crossing_count(); ++k) {
    on_segment[p.crossings[k].over].push_back(k);
    on_segment[p.crossings[k].under].push_back(k);
  }

  int next_arc = 0;
  for (const LinkComponent& lc : p.components) {
    std::vector<Passage> passages;
    for (int s : lc.segments) {
      const Segment& seg = p.segments[s];
      std::vector<int> xs = on_segment[s];
      auto pos = [&](int k) {
        const Crossing& x = p.crossings[k];
        return (seg.horizontal ? x.col : x.row) * seg.direction();
      };
      std::sort(xs.begin(), xs.end(), [&](int a, int b) { return pos(a) < pos(b); });
      for (int k : xs) passages.push_back({k, seg.horizontal});
    }
    const int m = static_cast<int>(passages.size());
    if (m == 0) {
      ++pd.free_loops;
      continue;
    }
    const int base = next_arc;
    next_arc += m;
    for (int t = 0; t < m; ++t) {
      const int in = base + (t + m - 1) % m;
      const int out = base + t;
      const Crossing& x = p.crossings[passages[t].crossing];
      auto& slots = pd.crossings[passages[t].crossing];  // {S, E, N, W}
      if (passages[t].over) {
        const bool east = p.segments[x.over].direction() > 0;
        slots[3] = east ? in : out;
        slots[1] = east ? out : in;
      } else {
        const bool north = p.segments[x.under].direction() > 0;
        slots[0] = north ? in : out;
        slots[2] = north ? out : in;
      }
    }
  }
  pd.arc_count = next_arc;
  return pd;
}

namespace {

struct StateHistogram {
  // counts[a][loops]: states with `a` A-smoothings and `loops` circles.
  std::vector<std::vector<std::int64_t>> counts;
};

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void accumulate_states(const PdCode& pd, std::uint64_t begin, std::uint64_t end, StateHistogram& h) {
  const int c = static_cast<int>(pd.crossings.size());
  std::vector<int> parent(pd.arc_count);
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int sets = pd.arc_count;
    auto unite = [&](int a, int b) {
      a = find(parent, a);
      b = find(parent, b);
      if (a != b) {
        parent[a] = b;
        --sets;
      }
    };
    for (int k = 0; k < c; ++k) {
      const auto& x = pd.crossings[k];
      if (mask >> k & 1) {
        unite(x[0], x[1]);
        unite(x[2], x[3]);
      } else {
        unite(x[0], x[3]);
        unite(x[1], x[2]);
      }
    }
    ++h.counts[std::popcount(mask)][sets];
  }
}

}  // namespace

LaurentPolynomial kauffman_bracket(const PdCode& pd, int jobs) {
  const int c = static_cast<int>(pd.crossings.size());
  if (c == 0) return pd.free_loops == 0 ? LaurentPolynomial(1) : unlink_value(pd.free_loops);

  const std::uint64_t total = std::uint64_t{1} << c;
  jobs = std::clamp<int>(jobs, 1, 64);
  if (total < (1u << 12)) jobs = 1;
  std::vector<StateHistogram> parts(jobs);
  for (auto& h : parts)
    h.counts.assign(c + 1, std::vector<std::int64_t>(pd.arc_count + 1, 0));
  if (jobs == 1) {
    accumulate_states(pd, 0, total, parts[0]);
  } else {
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
      const std::uint64_t b = total * j / jobs, e = total * (j + 1) / jobs;
      workers.emplace_back(accumulate_states, std::cref(pd), b, e, std::ref(parts[j]));
    }
    for (auto& w : workers) w.join();
  }

  const LaurentPolynomial delta = loop_value();
  std::vector<LaurentPolynomial> delta_pow(pd.arc_count + pd.free_loops + 1);
  delta_pow[0] = LaurentPolynomial(1);
  for (std::size_t k = 1; k < delta_pow.size(); ++k) delta_pow[k] = delta_pow[k - 1] * delta;

  LaurentPolynomial out;
  for (int a = 0; a <= c; ++a) {
    for (int loops = 1; loops <= pd.arc_count; ++loops) {
      std::int64_t count = 0;
      for (const auto& h : parts) count += h.counts[a][loops];
      if (count == 0) continue;
      out += LaurentPolynomial::monomial(count, a - (c - a)) * delta_pow[loops + pd.free_loops - 1];
    }
  }
  return out;
}

LaurentPolynomial kauffman_bracket(const PlanarLinkDiagram& p, int crossing_bound, int jobs) {
  if (p.crossing_count() > crossing_bound) throw TooManyCrossings(p.crossing_count(), crossing_bound);
  return kauffman_bracket(pd_code(p), jobs);
}

LaurentPolynomial jones_in_a(const PlanarLinkDiagram& p, int crossing_bound, int jobs) {
  const LaurentPolynomial factor = LaurentPolynomial::monomial(-1, 3).pow(-p.writhe());
  return factor * kauffman_bracket(p, crossing_bound, jobs);
}

LaurentPolynomial unlink_value(int components) {
  if (components <= 1) return LaurentPolynomial(1);
  return loop_value().pow(components - 1);
}

const char* to_string(UnlinkVerdict v) {
  switch (v) {
    case UnlinkVerdict::certified_unlink_heuristic: return "certified_unlink_heuristic";
    case UnlinkVerdict::not_unlink: return "not_unlink";
    case UnlinkVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

UnlinkCertificate unlink_certificate(const PlanarLinkDiagram& p, int crossing_bound, int jobs) {
  const int c = p.component_count();
  if (c == 0) return {UnlinkVerdict::certified_unlink_heuristic, "empty link"};
  const auto lk = linking_matrix(p);
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b)
      if (lk[a][b] != 0)
        return {UnlinkVerdict::not_unlink, "lk(" + std::to_string(a) + ", " + std::to_string(b) +
                                               ") = " + std::to_string(lk[a][b])};
  if (p.crossing_count() > crossing_bound) throw TooManyCrossings(p.crossing_count(), crossing_bound);
  const LaurentPolynomial whole = jones_in_a(p, crossing_bound, jobs);
  if (whole != unlink_value(c))
    return {UnlinkVerdict::not_unlink, "normalized bracket " + whole.to_string() + " differs from the " +
                                           std::to_string(c) + "-component unlink"};
  if (c > 1) {
    for (int k = 0; k < c; ++k) {
      const LaurentPolynomial f = jones_in_a(planar_diagram(component_grid(p, k)), crossing_bound, jobs);
      if (f != LaurentPolynomial(1))
        return {UnlinkVerdict::not_unlink,
                "component " + std::to_string(k) + " has normalized bracket " + f.to_string()};
    }
  }
  return {UnlinkVerdict::certified_unlink_heuristic,
          "linking numbers vanish and normalized brackets match the unlink (heuristic)"};
}

GridDiagram cyclic_permute(const GridDiagram& g, int a, int b) {
  std::vector<Cell> pts;
  for (Cell c : g.points()) pts.push_back({c.col + a, c.row + b});
  return GridDiagram(g.grid_number(), std::move(pts), g.label());  // constructor reduces mod n
}

}  // namespace trigrid
