#include <doctest.h>

#include "oracles.hpp"
#include "trigrid/constructions.hpp"
#include "trigrid/enumeration.hpp"
#include "trigrid/surface.hpp"

using namespace trigrid;

namespace {

/// Odd cycle search by brute force over all 2-colourings (small graphs only).
bool bipartite_brute_force(const ColoredCubicGraph& g) {
  const int v = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << v); ++mask) {
    bool ok = true;
    for (int a = 0; a < v && ok; ++a)
      for (int b : g.neighbor[a]) ok = ok && ((mask >> a & 1) != (mask >> b & 1));
    if (ok) return true;
  }
  return false;
}

/// Bicoloured cycles for one colour pair, counted by walking alternately.
int bicolored_cycles(const ColoredCubicGraph& g, int c1, int c2) {
  std::vector<bool> seen(g.vertex_count());
  int cycles = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    int v = s;
    int colour = c1;
    do {
      seen[v] = true;
      v = g.neighbor[v][colour];
      colour = colour == c1 ? c2 : c1;
    } while (v != s || colour != c1);
  }
  return cycles;
}

CombinatorialTGD witness(int n, const WitnessPredicate& pred) {
  EnumerationOptions o;
  o.n = n;
  o.symmetry = SymmetryGroup::translations_rotation_reflection;
  const auto r = find_witness(pred, o);
  REQUIRE(r.witness.has_value());
  return *r.witness;
}

}  // namespace

TEST_CASE("graph of the full square is K4 with a proper colouring") {
  const auto g = graph_of(example_n2());
  REQUIRE(g.vertex_count() == 4);
  // cells sorted: (0,0), (0,1), (1,0), (1,1)
  CHECK(g.next(0, EdgeColor::alpha) == 1);
  CHECK(g.next(2, EdgeColor::alpha) == 3);
  CHECK(g.next(0, EdgeColor::beta) == 2);
  CHECK(g.next(1, EdgeColor::beta) == 3);
  CHECK(g.next(0, EdgeColor::gamma) == 3);
  CHECK(g.next(1, EdgeColor::gamma) == 2);
  CHECK_FALSE(is_bipartite(g));
  CHECK(g.component_count == 1);
}

TEST_CASE("graph of the n = 3 diagram is bipartite; empty graph") {
  const auto g = graph_of(example_n3());
  CHECK(g.vertex_count() == 6);
  CHECK(is_bipartite(g));
  CHECK(graph_of(validate_combinatorial(3, std::vector<Cell>{})).vertex_count() == 0);
}

TEST_CASE("xo placement") {
  CHECK_FALSE(xo_placement(example_n2()).has_value());
  const auto xo = xo_placement(example_n3());
  REQUIRE(xo.has_value());
  CHECK(xo->size() == 6);
  const auto empty = xo_placement(validate_combinatorial(2, std::vector<Cell>{}));
  REQUIRE(empty.has_value());
  CHECK(empty->empty());
}

TEST_CASE("xo placement puts one X and one O on every line") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& cells : oracle::brute_force_diagrams(n)) {
      const auto d = validate_combinatorial(n, cells);
      const auto xo = xo_placement(d);
      if (!xo) continue;
      const int m = d.grid_number();
      std::vector<int> col(m), row(m), diag(m);
      for (std::size_t k = 0; k < cells.size(); ++k) {
        const int s = (*xo)[k] == Mark::X ? 1 : -1;
        col[cells[k].col] += s;
        row[cells[k].row] += s;
        diag[(cells[k].col + cells[k].row) % m] += s;
      }
      for (int k = 0; k < m; ++k) {
        CHECK(col[k] == 0);
        CHECK(row[k] == 0);
        CHECK(diag[k] == 0);
      }
    }
}

TEST_CASE("graph invariants against brute force for n <= 4") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& cells : oracle::brute_force_diagrams(n)) {
      const auto d = validate_combinatorial(n, cells);
      const auto g = graph_of(d);
      CHECK(is_bipartite(g) == bipartite_brute_force(g));
      CHECK(xo_placement(d).has_value() == is_bipartite(g));
      const auto s = classify(d);
      CHECK(s.faces[0] == bicolored_cycles(g, 0, 1));
      CHECK(s.faces[1] == bicolored_cycles(g, 1, 2));
      CHECK(s.faces[2] == bicolored_cycles(g, 2, 0));
      CHECK(s.V == 2 * d.size());
      CHECK(s.E == 3 * d.size());
      CHECK(s.euler == s.V - s.E + s.F);
      CHECK(s.euler == s.faces[0] + s.faces[1] + s.faces[2] - d.size());
      CHECK(s.orientable == bipartite_brute_force(g));
      // the geometric route gives the same report
      const auto sg = classify(to_geometric(d));
      CHECK(sg.euler == s.euler);
      CHECK(sg.orientable == s.orientable);
      CHECK(sg.name() == s.name());
    }
}

TEST_CASE("surface names") {
  CHECK(SurfaceName::from_euler(true, 2).to_string() == "S^2");
  CHECK(SurfaceName::from_euler(true, 0).to_string() == "T^2");
  CHECK(SurfaceName::from_euler(true, -2).to_string() == "#^2 T^2");
  CHECK(SurfaceName::from_euler(false, 1).to_string() == "RP^2");
  CHECK(SurfaceName::from_euler(false, -1).to_string() == "#^3 RP^2");
}

TEST_CASE("classification of the named examples") {
  const auto a = classify(example_n2());
  CHECK_FALSE(a.orientable);
  CHECK(a.euler == 1);
  CHECK(a.name() == "RP^2");
  const auto b = classify(example_n3());
  CHECK(b.orientable);
  CHECK(b.euler == 0);
  CHECK(b.name() == "T^2");
  const auto c = classify(staircase(5));
  CHECK(c.orientable);
  CHECK(c.name() == "#^2 T^2");
}

TEST_CASE("fillability status") {
  CHECK(fillability_status(example_n2()).status == FillabilityStatus::lagrangian_eligible);
  CHECK(fillability_status(example_n3()).status == FillabilityStatus::lagrangian_eligible);
  CHECK(fillability_status(staircase(4)).status == FillabilityStatus::lagrangian_eligible);
  const auto f5 = fillability_status(staircase(5));
  CHECK(f5.status == FillabilityStatus::simple);
  CHECK(f5.all_unlink);
  CHECK_FALSE(f5.all_tb_minus_one);
  CHECK(std::string(to_string(FillabilityStatus::immersed_eligible)) == "immersed-eligible");
  // a crossing bound of zero leaves crossed grids inconclusive; rot = 0 still holds
  const auto g = fillability_status(staircase(4), 0);
  CHECK_FALSE(g.all_unlink);
  CHECK(g.status == FillabilityStatus::immersed_eligible);
  bool inconclusive = false;
  for (const auto& e : g.grids) inconclusive = inconclusive || e.verdict == UnlinkVerdict::inconclusive;
  CHECK(inconclusive);
}

TEST_CASE("rp2 embeddability") {
  const std::vector<bool> expected = {true, false, false, false, true, true, false, false, true, true, false, false};
  for (int k = 1; k <= 12; ++k) CHECK(rp2_embeddable(k) == expected[k - 1]);
}

TEST_CASE("obstruction") {
  SUBCASE("Klein bottle, q = 0, fires") {
    const auto d = witness(4, [](const CombinatorialTGD&, const DiagramAnalysis& a) {
      return !a.surface.orientable && a.surface.connected() && a.surface.euler == 0;
    });
    const auto s = classify(d);
    CHECK(s.faces[0] + s.faces[1] + s.faces[2] == 3);
    CHECK(d.size() == 3);
    const auto v = obstruction_report(d, "ab,bg");
    CHECK(v.fires);
    CHECK(v.q == 0);
    CHECK(v.unfillable == ColorPair::gamma_alpha);
    CHECK(v.message.find("γα not slice-disk fillable") == 0);
    CHECK(v.warnings.empty());
  }
  SUBCASE("orientable fails the hypothesis") {
    const auto v = obstruction_report(example_n3(), ColorPair::alpha_beta, ColorPair::gamma_alpha);
    CHECK_FALSE(v.fires);
    CHECK(v.unfillable == ColorPair::beta_gamma);
    CHECK(v.message.find("orientable") != std::string::npos);
  }
  SUBCASE("q = -1 fires, q = -3 does not") {
    const auto m1 = witness(6, [](const CombinatorialTGD&, const DiagramAnalysis& a) {
      return !a.surface.orientable && a.surface.connected() && a.surface.euler == -1;
    });
    CHECK(obstruction_report(m1, "bg,ga").fires);
    const auto m3 = witness(6, [](const CombinatorialTGD&, const DiagramAnalysis& a) {
      return !a.surface.orientable && a.surface.connected() && a.surface.euler == -3;
    });
    const auto v = obstruction_report(m3, "bg,ga");
    CHECK_FALSE(v.fires);
    CHECK(v.q == -3);
  }
  SUBCASE("RP^2 with q = 1 does not fire") { CHECK_FALSE(obstruction_report(example_n2(), "ab,bg").fires); }
  SUBCASE("disconnected diagrams carry a warning") {
    CHECK_FALSE(obstruction_report(squares_antidiagonal(3), "ab,bg").warnings.empty());
  }
  SUBCASE("bad claims") {
    CHECK_THROWS_AS(obstruction_report(example_n2(), "ab,ab"), LabelError);
    CHECK_THROWS_AS(obstruction_report(example_n2(), "ab"), LabelError);
    CHECK_THROWS_AS(obstruction_report(example_n2(), "ab,zz"), LabelError);
  }
}

TEST_CASE("analysis raises no red flags on small censuses") {
  for (int n = 2; n <= 5; ++n) {
    EnumerationOptions o;
    o.n = n;
    o.symmetry = SymmetryGroup::translations_rotation_reflection;
    for (const auto& e : enumerate(o).diagrams) CHECK(analyze(e.diagram).red_flags.empty());
  }
}
