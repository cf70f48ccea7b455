#include <doctest.h>

#include "trigrid/constructions.hpp"
#include "trigrid/svg.hpp"

using namespace trigrid;

namespace {

int count(const std::string& s, const std::string& needle) {
  int c = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("diagram rendering") {
  const std::string s = render_svg(example_n2());
  CHECK(s.rfind("<?xml", 0) == 0);
  CHECK(count(s, "class=\"line vertical\"") == 2);
  CHECK(count(s, "class=\"line horizontal\"") == 2);
  CHECK(count(s, "class=\"line diagonal\"") == 2);
  CHECK(count(s, std::string("stroke=\"") + kAlphaColor) == 2);
  CHECK(count(s, std::string("stroke=\"") + kBetaColor) == 2);
  CHECK(count(s, std::string("stroke=\"") + kGammaColor) == 2);
  CHECK(count(s, "class=\"dot\"") == 4);
  CHECK(render_svg(example_n2()) == s);
}

TEST_CASE("empty diagram renders the grid only") {
  const std::string s = render_svg(validate_combinatorial(3, std::vector<Cell>{}));
  CHECK(count(s, "class=\"dot\"") == 0);
  CHECK(count(s, "class=\"line") == 9);
}

TEST_CASE("front rendering") {
  const std::string s = render_svg(front_polyline(GridDiagram(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})));
  CHECK(count(s, "class=\"front\"") == 1);
  CHECK(count(s, "class=\"cusp\"") == 2);
  const std::string t = render_svg(front_polyline(trefoil_grid()));
  CHECK(count(t, "class=\"crossing\"") == 3);
}

TEST_CASE("grid rendering") {
  const std::string s = render_svg(trefoil_grid());
  CHECK(count(s, "class=\"dot\"") == 10);
  CHECK(count(s, "class=\"strand vertical\"") == 5);
}
