#pragma once
// Reference implementations used only by the tests. They deliberately avoid
// the library's own algorithms: brute force over subsets, explicit group
// actions, and a skein recursion working straight from grid geometry or PD.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "trigrid/core.hpp"

namespace oracle {

using trigrid::Cell;
using Cells = std::vector<Cell>;

// ---- diagrams --------------------------------------------------------------

inline bool valid_cells(int n, const Cells& cells) {
  std::vector<int> col(n), row(n), diag(n);
  for (Cell c : cells) {
    ++col[c.col];
    ++row[c.row];
    ++diag[(c.col + c.row) % n];
  }
  for (int k = 0; k < n; ++k)
    for (int v : {col[k], row[k], diag[k]})
      if (v != 0 && v != 2) return false;
  return true;
}

/// Every valid nonempty cell set, by filtering all 2^(n^2) subsets.
inline std::set<Cells> brute_force_diagrams(int n) {
  std::set<Cells> out;
  const int m = n * n;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    Cells cells;
    for (int k = 0; k < m; ++k)
      if (mask >> k & 1) cells.push_back({k / n, k % n});
    if (valid_cells(n, cells)) {
      std::sort(cells.begin(), cells.end());
      out.insert(cells);
    }
  }
  return out;
}

inline int mod(int a, int n) { return ((a % n) + n) % n; }

/// The order-3 map (i, j) -> (j, -1 - i - j), written out independently.
inline Cells rotate(int n, const Cells& cells) {
  Cells out;
  for (Cell c : cells) out.push_back({c.row, mod(-1 - c.col - c.row, n)});
  std::sort(out.begin(), out.end());
  return out;
}

inline Cells shift(int n, const Cells& cells, int a, int b) {
  Cells out;
  for (Cell c : cells) out.push_back({mod(c.col + a, n), mod(c.row + b, n)});
  std::sort(out.begin(), out.end());
  return out;
}

inline Cells flip(const Cells& cells) {
  Cells out;
  for (Cell c : cells) out.push_back({c.row, c.col});
  std::sort(out.begin(), out.end());
  return out;
}

/// Orbit by closing {d} under the generators until nothing new appears.
inline std::set<Cells> orbit(int n, const Cells& d, bool rotation, bool reflection) {
  std::set<Cells> seen{d};
  std::vector<Cells> todo{d};
  while (!todo.empty()) {
    Cells cur = todo.back();
    todo.pop_back();
    std::vector<Cells> next{shift(n, cur, 1, 0), shift(n, cur, 0, 1)};
    if (rotation) next.push_back(rotate(n, cur));
    if (reflection) next.push_back(flip(cur));
    for (auto& x : next)
      if (seen.insert(x).second) todo.push_back(x);
  }
  return seen;
}

// ---- Laurent polynomials as plain maps -------------------------------------

using Poly = std::map<int, long long>;

inline void add(Poly& p, int e, long long c) {
  if ((p[e] += c) == 0) p.erase(e);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) add(r, ea + eb, ca * cb);
  return r;
}

inline Poly delta_pow(int k) {
  Poly r{{0, 1}};
  for (int i = 0; i < k; ++i) r = mul(r, Poly{{2, -1}, {-2, -1}});
  return r;
}

// ---- skein recursion on a PD code -------------------------------------------

/// <X[a,b,c,d]> = A <(ab)(cd)> + A^-1 <(ad)(bc)>; a circle alone has bracket 1.
/// Recursion over crossings, tracking the pairing graph of arc labels.
inline Poly skein_pd(const std::vector<std::array<int, 4>>& pd, int extra_loops = 0) {
  Poly total;
  std::vector<std::pair<int, int>> joins;
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int a_minus_b) {
    if (k == pd.size()) {
      std::map<int, std::vector<int>> adj;
      for (auto [u, v] : joins) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
      std::set<int> seen;
      int loops = extra_loops;
      for (auto& [start, _] : adj) {
        if (seen.count(start)) continue;
        ++loops;
        std::vector<int> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          for (int v : adj[u])
            if (seen.insert(v).second) stack.push_back(v);
        }
      }
      Poly term = delta_pow(std::max(loops, 1) - 1);
      for (auto [e, c] : term) add(total, e + a_minus_b, c);
      return;
    }
    const auto& x = pd[k];
    joins.push_back({x[0], x[1]});
    joins.push_back({x[2], x[3]});
    rec(k + 1, a_minus_b + 1);
    joins.resize(joins.size() - 2);
    joins.push_back({x[0], x[3]});
    joins.push_back({x[1], x[2]});
    rec(k + 1, a_minus_b - 1);
    joins.resize(joins.size() - 2);
  };
  if (pd.empty()) return delta_pow(std::max(extra_loops, 1) - 1);
  rec(0, 0);
  return total;
}

/// Writhe of a one-component PD whose arc labels 1..m increase along the
/// orientation; X[i,j,k,l] has the under strand running i -> k.
inline int pd_writhe(const std::vector<std::array<int, 4>>& pd) {
  const int m = 2 * static_cast<int>(pd.size());
  int w = 0;
  for (const auto& x : pd) {
    const int j = x[1], l = x[3];
    const bool l_to_j = j == l % m + 1;
    w += l_to_j ? 1 : -1;
  }
  return w;
}

/// (-A^3)^-w * bracket.
inline Poly normalize(const Poly& bracket, int writhe) {
  Poly r;
  const long long sign = (writhe % 2 == 0) ? 1 : -1;
  for (auto [e, c] : bracket) add(r, e - 3 * writhe, sign * c);
  return r;
}

inline Poly mirror(const Poly& p) {
  Poly r;
  for (auto [e, c] : p) r[-e] = c;
  return r;
}

/// Standard 3-crossing trefoil diagram and its writhe-normalized bracket.
inline const std::vector<std::array<int, 4>>& standard_trefoil_pd() {
  static const std::vector<std::array<int, 4>> pd = {{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}};
  return pd;
}

// ---- skein straight from grid geometry --------------------------------------

/// Bracket of the grid link (horizontal over vertical), summing all 2^c states.
/// Pieces of segments between crossings/corners are glued at corners and, per
/// state, at crossings: A joins {N,W},{E,S}; B joins {N,E},{S,W}.
inline Poly grid_bracket(int n, const Cells& pts) {
  struct Seg {
    bool horizontal;
    int line, lo, hi;  // span on the varying coordinate
    int lo_point, hi_point;
  };
  std::vector<Seg> segs;
  auto index_of = [&](Cell c) {
    return static_cast<int>(std::find(pts.begin(), pts.end(), c) - pts.begin());
  };
  for (int k = 0; k < n; ++k) {
    Cells inc, inr;
    for (Cell c : pts) {
      if (c.col == k) inc.push_back(c);
      if (c.row == k) inr.push_back(c);
    }
    if (inc.size() == 2) {
      std::sort(inc.begin(), inc.end(), [](Cell a, Cell b) { return a.row < b.row; });
      segs.push_back({false, k, inc[0].row, inc[1].row, index_of(inc[0]), index_of(inc[1])});
    }
    if (inr.size() == 2) {
      std::sort(inr.begin(), inr.end(), [](Cell a, Cell b) { return a.col < b.col; });
      segs.push_back({true, k, inr[0].col, inr[1].col, index_of(inr[0]), index_of(inr[1])});
    }
  }
  // Pieces: a segment is cut at each crossing along it. Node ids: piece ends.
  struct X {
    int h, v, col, row;
  };
  std::vector<X> xs;
  for (int h = 0; h < static_cast<int>(segs.size()); ++h)
    for (int v = 0; v < static_cast<int>(segs.size()); ++v) {
      const Seg &H = segs[h], &V = segs[v];
      if (!H.horizontal || V.horizontal) continue;
      if (H.lo < V.line && V.line < H.hi && V.lo < H.line && H.line < V.hi) xs.push_back({h, v, V.line, H.line});
    }
  // For each segment, sorted cut positions; piece p of segment s spans cuts[p]..cuts[p+1].
  std::vector<std::vector<int>> cuts(segs.size());
  for (std::size_t s = 0; s < segs.size(); ++s) {
    cuts[s].push_back(segs[s].lo);
    for (const X& x : xs) {
      if (x.h == static_cast<int>(s)) cuts[s].push_back(x.col);
      if (x.v == static_cast<int>(s)) cuts[s].push_back(x.row);
    }
    cuts[s].push_back(segs[s].hi);
    std::sort(cuts[s].begin(), cuts[s].end());
  }
  std::vector<int> piece_base(segs.size() + 1, 0);
  for (std::size_t s = 0; s < segs.size(); ++s)
    piece_base[s + 1] = piece_base[s] + static_cast<int>(cuts[s].size()) - 1;
  const int pieces = piece_base.back();
  auto piece_at = [&](int s, int pos, bool above) {
    // piece of segment s starting at pos (above) or ending at pos (below)
    const auto& c = cuts[s];
    const int k = static_cast<int>(std::find(c.begin(), c.end(), pos) - c.begin());
    return piece_base[s] + (above ? k : k - 1);
  };
  // Corner glue: each point joins the end pieces of its two segments.
  std::vector<std::pair<int, int>> fixed;
  std::map<int, std::vector<int>> at_point;
  for (std::size_t s = 0; s < segs.size(); ++s) {
    at_point[segs[s].lo_point].push_back(piece_base[s]);
    at_point[segs[s].hi_point].push_back(piece_base[s + 1] - 1);
  }
  for (auto& [_, v] : at_point) fixed.push_back({v[0], v[1]});

  Poly total;
  const int c = static_cast<int>(xs.size());
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
    std::vector<int> parent(pieces);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (auto [a, b] : fixed) unite(a, b);
    int a_minus_b = 0;
    for (int k = 0; k < c; ++k) {
      const X& x = xs[k];
      const int W = piece_at(x.h, x.col, false), E = piece_at(x.h, x.col, true);
      const int S = piece_at(x.v, x.row, false), N = piece_at(x.v, x.row, true);
      if (state >> k & 1) {
        unite(N, W);
        unite(E, S);
        ++a_minus_b;
      } else {
        unite(N, E);
        unite(S, W);
        --a_minus_b;
      }
    }
    int loops = 0;
    for (int p = 0; p < pieces; ++p) loops += find(p) == p;
    for (auto [e, co] : delta_pow(std::max(loops, 1) - 1)) add(total, e + a_minus_b, co);
  }
  return total;
}

// ---- random grids -----------------------------------------------------------

/// Points (i, s(i)) and (i, t(i)) for two permutations that never agree.
inline Cells random_grid(std::mt19937& rng, int n) {
  std::vector<int> s(n), t(n);
  std::iota(s.begin(), s.end(), 0);
  for (;;) {
    std::shuffle(s.begin(), s.end(), rng);
    t = s;
    std::shuffle(t.begin(), t.end(), rng);
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && s[i] != t[i];
    if (ok) break;
  }
  Cells out;
  for (int i = 0; i < n; ++i) {
    out.push_back({i, s[i]});
    out.push_back({i, t[i]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
