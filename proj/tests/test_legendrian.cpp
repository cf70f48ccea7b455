#include <doctest.h>

#include "oracles.hpp"
#include "trigrid/constructions.hpp"
#include "trigrid/legendrian.hpp"

using namespace trigrid;

namespace {

const GridDiagram kSquare(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});

std::multiset<std::pair<int, int>> tb_rot(const GridDiagram& g) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& li : legendrian_invariants(g)) out.insert({li.tb, li.rot_abs});
  return out;
}

}  // namespace

TEST_CASE("cusps of the square") {
  const auto c = cusp_census(kSquare);
  CHECK(c.cusp_count() == 2);
  // (0,0) is at the bottom-left: segments leave N and E
  CHECK(c.corners[0].cusp);
  CHECK(c.corners[0].vertical == Compass::N);
  CHECK(c.corners[0].horizontal == Compass::E);
  // (1,1) top-right: S and W
  CHECK(c.corners[3].cusp);
  CHECK_FALSE(c.corners[1].cusp);
  CHECK_FALSE(c.corners[2].cusp);
  CHECK(cusp_census(GridDiagram(3, {})).corners.empty());
}

TEST_CASE("any 2x2 block has two cusps") {
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      const GridDiagram g(5, {{a, b}, {a, (b + 2) % 5}, {(a + 2) % 5, b}, {(a + 2) % 5, (b + 2) % 5}});
      CHECK(cusp_census(g).cusp_count() == 2);
    }
}

TEST_CASE("square invariants") {
  const auto inv = legendrian_invariants(kSquare);
  REQUIRE(inv.size() == 1);
  CHECK(inv[0].tb == -1);
  CHECK(inv[0].rot == 0);
  CHECK(inv[0].cusps == 2);
}

TEST_CASE("n = 3 grids are tb -1, rot 0") {
  for (const auto& g : three_grids(example_n3())) {
    const auto inv = legendrian_invariants(g);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0].tb == -1);
    CHECK(inv[0].rot == 0);
  }
}

TEST_CASE("staircase(5) has a component with tb != -1") {
  bool found = false;
  for (const auto& g : three_grids(staircase(5)))
    for (const auto& li : legendrian_invariants(g)) found = found || li.tb != -1;
  CHECK(found);
}

TEST_CASE("tb + |rot| is odd and bounded for unknots") {
  std::mt19937 rng(17);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const GridDiagram g(n, oracle::random_grid(rng, n));
    for (const auto& li : legendrian_invariants(g)) {
      CHECK(li.cusps % 2 == 0);
      CHECK((li.tb + li.rot_abs) % 2 != 0);
      CHECK(li.rot_abs == std::abs(li.rot));
    }
  }
}

TEST_CASE("tb and rot_abs multisets survive cyclic permutation") {
  std::mt19937 rng(23);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const GridDiagram g(n, oracle::random_grid(rng, n));
    const int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    CHECK(tb_rot(g) == tb_rot(cyclic_permute(g, a, b)));
  }
}

TEST_CASE("trefoil tb") {
  const auto inv = legendrian_invariants(trefoil_grid());
  REQUIRE(inv.size() == 1);
  CHECK(inv[0].tb == 1);
  CHECK(tb_rot(trefoil_grid()) == tb_rot(cyclic_permute(trefoil_grid(), 1, 0)));
}

TEST_CASE("front polylines") {
  const Front f = front_polyline(kSquare);
  REQUIRE(f.polylines.size() == 1);
  CHECK(f.polylines[0].vertices.size() == 4);
  int cusps = 0;
  for (const auto& v : f.polylines[0].vertices) cusps += v.cusp;
  CHECK(cusps == 2);
  CHECK(front_polyline(GridDiagram(2, {})).polylines.empty());

  const Front t = front_polyline(trefoil_grid());
  REQUIRE(t.polylines.size() == 1);
  int tc = 0;
  for (const auto& v : t.polylines[0].vertices) tc += v.cusp;
  CHECK(tc == cusp_census(trefoil_grid()).cusp_count());
  CHECK(t.crossings.size() == 3);
  // consecutive front vertices move along slope +-1 lines
  for (const auto& pl : t.polylines) {
    const auto& vs = pl.vertices;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const auto& p = vs[k];
      const auto& q = vs[(k + 1) % vs.size()];
      CHECK(std::abs(q.x - p.x) == std::abs(q.y - p.y));
    }
  }
}
