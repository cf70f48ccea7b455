#include <doctest.h>

#include "oracles.hpp"
#include "trigrid/constructions.hpp"
#include "trigrid/geometric.hpp"

using namespace trigrid;

namespace {

GeoPoint pt(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }

}  // namespace

TEST_CASE("rationals") {
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(to_string(parse_rational("3")) == "3/1");
  CHECK(to_string(frac(parse_rational("-1/3"))) == "2/3");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("to_geometric") {
  const auto g = to_geometric(example_n2());
  REQUIRE(g.size() == 2);
  CHECK(g.points()[0] == pt("1/8", "1/8"));
  std::set<std::string> xs;
  for (const auto& p : g.points()) xs.insert(to_string(p.x));
  CHECK(xs == std::set<std::string>{"1/8", "5/8"});
}

TEST_CASE("validate_geometric") {
  CHECK(validate_geometric({pt("1/8", "1/8"), pt("1/8", "5/8"), pt("5/8", "1/8"), pt("5/8", "5/8")}).size() == 2);
  CHECK(validate_geometric({}).size() == 0);
  SUBCASE("three points cannot pair") {
    try {
      validate_geometric({pt("0", "0"), pt("1/2", "0"), pt("0", "1/2")});
      FAIL("expected UnpairedPoint");
    } catch (const UnpairedPoint& e) {
      CHECK(e.direction == LineDirection::column);
      CHECK(e.value == "1/2");
      CHECK(e.count == 1);
    }
  }
  SUBCASE("coordinates reduce mod 1") {
    CHECK_THROWS_AS(validate_geometric({pt("1/8", "1/8"), pt("9/8", "-7/8")}), DuplicatePoint);
  }
  SUBCASE("partners") {
    const auto g = validate_geometric({pt("1/8", "1/8"), pt("1/8", "5/8"), pt("5/8", "1/8"), pt("5/8", "5/8")});
    CHECK(g.partner(LineDirection::column, 0) == 1);
    CHECK(g.partner(LineDirection::row, 0) == 2);
    CHECK(g.partner(LineDirection::diagonal, 0) == 3);
  }
}

TEST_CASE("geometric_rotate") {
  const auto g = geometric_rotate(to_geometric(example_n2()));
  CHECK(std::find(g.points().begin(), g.points().end(), pt("1/8", "3/4")) != g.points().end());
  const auto e = to_geometric(example_n3());
  CHECK(geometric_rotate(geometric_rotate(geometric_rotate(e))) == e);
}

TEST_CASE("to_geometric is valid and its grids agree with three_grids for n <= 4") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& cells : oracle::brute_force_diagrams(n)) {
      const auto d = validate_combinatorial(n, cells);
      const auto g = to_geometric(d);
      CHECK_NOTHROW(validate_geometric(g.points()));
      const auto a = three_grids(d);
      const auto b = geometric_grids(g);
      for (int k = 0; k < 3; ++k) {
        // geometric grids drop empty lines, so compare after compressing the combinatorial one
        std::vector<int> cols, rows;
        for (Cell c : a[k].points()) {
          cols.push_back(c.col);
          rows.push_back(c.row);
        }
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        std::vector<Cell> compressed;
        for (Cell c : a[k].points())
          compressed.push_back({static_cast<int>(std::lower_bound(cols.begin(), cols.end(), c.col) - cols.begin()),
                                static_cast<int>(std::lower_bound(rows.begin(), rows.end(), c.row) - rows.begin())});
        std::sort(compressed.begin(), compressed.end());
        CHECK(b[k].points() == compressed);
      }
    }
}

TEST_CASE("geometric_grids of the empty diagram") {
  for (const auto& g : geometric_grids(validate_geometric({}))) CHECK(g.points().empty());
}
