#include "trigrid/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigrid/constructions.hpp"
#include "trigrid/enumeration.hpp"
#include "trigrid/geometric.hpp"
#include "trigrid/io.hpp"
#include "trigrid/legendrian.hpp"
#include "trigrid/link_diagram.hpp"
#include "trigrid/surface.hpp"
#include "trigrid/svg.hpp"

namespace trigrid {

using nlohmann::ordered_json;

namespace {

struct CommonOptions {
  std::string input;
  std::string output;
  std::string format;  // empty: json for document producers, text for reports
  std::string symmetry = "t";
  int jobs = 1;
  int crossing_bound = kDefaultCrossingBound;
  std::uint64_t budget_nodes = 100'000'000;
  double budget_seconds = 60.0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  const CommonOptions& opt;

  std::string read_input() const {
    if (opt.input.empty() || opt.input == "-") {
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
    std::ifstream f(opt.input, std::ios::binary);
    if (!f) throw UsageError("cannot read input file '" + opt.input + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  DiagramDocument read_document() const { return parse_document(read_input()); }

  void write(const std::string& text) const {
    if (opt.output.empty() || opt.output == "-") {
      out << text;
      return;
    }
    std::ofstream f(opt.output, std::ios::binary);
    if (!f) throw UsageError("cannot write output file '" + opt.output + "'");
    f << text;
  }

  bool json() const { return opt.format == "json"; }
  bool text_sketch_requested() const { return opt.format == "text"; }
};

// ---- report serialization -------------------------------------------------

ordered_json invariants_json(const std::vector<LegendrianInvariants>& inv) {
  ordered_json arr = ordered_json::array();
  for (const auto& li : inv)
    arr.push_back({{"component", li.component},
                   {"tb", li.tb},
                   {"rot", li.rot},
                   {"rot_abs", li.rot_abs},
                   {"cusps", li.cusps},
                   {"self_writhe", li.self_writhe}});
  return arr;
}

ordered_json surface_json(const SurfaceReport& s) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : s.components)
    comps.push_back({{"least_vertex", c.vertices.front()},
                     {"V", c.V},
                     {"E", c.E},
                     {"F", c.F},
                     {"faces", c.faces},
                     {"euler", c.euler},
                     {"orientable", c.orientable},
                     {"name", c.name.to_string()}});
  return {{"b", s.b},       {"V", s.V},           {"E", s.E},
          {"F", s.F},       {"faces", s.faces},   {"euler", s.euler},
          {"orientable", s.orientable}, {"connected", s.connected()}, {"name", s.name()},
          {"components", comps}};
}

ordered_json fillability_json(const FillabilityReport& f) {
  ordered_json grids = ordered_json::array();
  for (const auto& g : f.grids)
    grids.push_back({{"label", ascii_label(g.label)},
                     {"components", g.components},
                     {"crossings", g.crossings},
                     {"verdict", to_string(g.verdict)},
                     {"reason", g.reason},
                     {"invariants", invariants_json(g.invariants)}});
  return {{"status", to_string(f.status)},
          {"all_unlink", f.all_unlink},
          {"all_tb_minus_one", f.all_tb_minus_one},
          {"all_rot_zero", f.all_rot_zero},
          {"grids", grids},
          {"notes", f.notes}};
}

std::string surface_text(const SurfaceReport& s) {
  std::ostringstream o;
  o << "surface: " << s.name() << " (" << (s.orientable ? "orientable" : "nonorientable")
    << ", euler characteristic " << s.euler << ", " << s.components.size() << " component"
    << (s.components.size() == 1 ? "" : "s") << ")\n";
  o << "  V=" << s.V << " E=" << s.E << " F=" << s.F << " (c1, c2, c3) = (" << s.faces[0] << ", " << s.faces[1]
    << ", " << s.faces[2] << ") b=" << s.b << "\n";
  if (s.components.size() > 1)
    for (std::size_t k = 0; k < s.components.size(); ++k) {
      const auto& c = s.components[k];
      o << "  component " << k << ": " << c.name.to_string() << ", euler " << c.euler << ", "
        << (c.orientable ? "orientable" : "nonorientable") << ", " << c.V << " points\n";
    }
  return o.str();
}

std::string fillability_text(const FillabilityReport& f) {
  std::ostringstream o;
  for (const auto& g : f.grids) {
    o << "grid " << greek_label(g.label) << ": " << g.components << " component" << (g.components == 1 ? "" : "s")
      << ", " << g.crossings << " crossings, " << to_string(g.verdict) << "\n";
    for (const auto& li : g.invariants)
      o << "  component " << li.component << ": tb=" << li.tb << " rot_abs=" << li.rot_abs << " cusps=" << li.cusps
        << "\n";
  }
  o << "status: " << to_string(f.status) << "\n";
  for (const auto& n : f.notes) o << "note: " << n << "\n";
  return o.str();
}

std::string document_text(const DiagramDocument& doc) {
  if (const auto* d = std::get_if<CombinatorialTGD>(&doc.diagram))
    return "combinatorial n=" + std::to_string(d->grid_number()) + " b=" + std::to_string(d->size()) + "\n" +
           text_sketch(d->grid_number(), d->cells());
  if (const auto* g = std::get_if<GridDiagram>(&doc.diagram))
    return "grid n=" + std::to_string(g->grid_number()) + "\n" + text_sketch(g->grid_number(), g->points());
  const auto& geo = std::get<GeometricTGD>(doc.diagram);
  std::string s = "geometric b=" + std::to_string(geo.size()) + "\n";
  for (const auto& p : geo.points()) s += "  (" + to_string(p.x) + ", " + to_string(p.y) + ")\n";
  return s;
}

std::array<GridDiagram, 3> grids_of(const DiagramDocument& doc) {
  if (const auto* d = std::get_if<CombinatorialTGD>(&doc.diagram)) return three_grids(*d);
  if (const auto* g = std::get_if<GeometricTGD>(&doc.diagram)) return geometric_grids(*g);
  throw UsageError("a grid document has no triple structure; expected a combinatorial or geometric diagram");
}

const CombinatorialTGD& require_combinatorial(const DiagramDocument& doc) {
  if (const auto* d = std::get_if<CombinatorialTGD>(&doc.diagram)) return *d;
  throw UsageError("this command needs a combinatorial diagram");
}

// ---- commands -------------------------------------------------------------

int cmd_validate(const Io& io) {
  const DiagramDocument doc = io.read_document();
  if (io.json()) {
    ordered_json j{{"valid", true}};
    std::visit([&](const auto& d) { j["b"] = d.size(); }, doc.diagram);
    io.write(j.dump() + "\n");
  } else {
    io.write("valid\n" + document_text(doc));
  }
  return kExitOk;
}

int cmd_grids(const Io& io) {
  const auto grids = grids_of(io.read_document());
  if (io.json()) {
    ordered_json arr = ordered_json::array();
    for (const auto& g : grids) {
      ordered_json pts = ordered_json::array();
      for (Cell c : g.points()) pts.push_back({c.col, c.row});
      arr.push_back({{"label", ascii_label(g.label())}, {"n", g.grid_number()}, {"points", pts}});
    }
    io.write(arr.dump() + "\n");
  } else {
    std::string s;
    for (const auto& g : grids)
      s += "grid " + std::string(greek_label(g.label())) + "\n" + text_sketch(g.grid_number(), g.points());
    io.write(s);
  }
  return kExitOk;
}

int cmd_analyze(const Io& io) {
  const DiagramDocument doc = io.read_document();
  const int bound = io.opt.crossing_bound, jobs = io.opt.jobs;
  if (const auto* g = std::get_if<GridDiagram>(&doc.diagram)) {
    const PlanarLinkDiagram p = planar_diagram(*g);
    const auto inv = legendrian_invariants(p);
    std::string verdict;
    try {
      verdict = to_string(unlink_certificate(p, bound, jobs).verdict);
    } catch (const TooManyCrossings& e) {
      verdict = "inconclusive";
    }
    if (io.json()) {
      io.write(ordered_json{{"components", p.component_count()},
                            {"crossings", p.crossing_count()},
                            {"writhe", p.writhe()},
                            {"verdict", verdict},
                            {"linking_matrix", linking_matrix(p)},
                            {"invariants", invariants_json(inv)}}
                   .dump() +
               "\n");
    } else {
      std::ostringstream o;
      o << "grid: " << p.component_count() << " components, " << p.crossing_count() << " crossings, " << verdict
        << "\n";
      for (const auto& li : inv)
        o << "  component " << li.component << ": tb=" << li.tb << " rot_abs=" << li.rot_abs << " cusps=" << li.cusps
          << "\n";
      io.write(o.str());
    }
    return kExitOk;
  }
  DiagramAnalysis a;
  if (const auto* d = std::get_if<CombinatorialTGD>(&doc.diagram))
    a = analyze(*d, bound, jobs);
  else
    a = analyze(std::get<GeometricTGD>(doc.diagram), bound, jobs);
  if (io.json()) {
    io.write(ordered_json{{"surface", surface_json(a.surface)},
                          {"fillability", fillability_json(a.fillability)},
                          {"red_flags", a.red_flags}}
                 .dump() +
             "\n");
  } else {
    std::string s = fillability_text(a.fillability) + surface_text(a.surface);
    for (const auto& r : a.red_flags) s += "red flag: " + r + "\n";
    io.write(s);
  }
  return kExitOk;
}

int cmd_classify(const Io& io) {
  const DiagramDocument doc = io.read_document();
  SurfaceReport s;
  FillabilityReport f;
  if (const auto* d = std::get_if<CombinatorialTGD>(&doc.diagram)) {
    s = classify(*d);
    f = fillability_status(*d, io.opt.crossing_bound, io.opt.jobs);
  } else if (const auto* g = std::get_if<GeometricTGD>(&doc.diagram)) {
    s = classify(*g);
    f = fillability_status(geometric_grids(*g), io.opt.crossing_bound, io.opt.jobs);
  } else {
    throw UsageError("classify needs a combinatorial or geometric diagram");
  }
  if (io.json()) {
    ordered_json j = surface_json(s);
    j["status"] = to_string(f.status);
    io.write(j.dump() + "\n");
  } else {
    io.write(surface_text(s) + "status: " + to_string(f.status) + "\n");
  }
  return kExitOk;
}

EnumerationOptions enumeration_options(const CommonOptions& opt, int n, int b_min, int b_max,
                                       const std::vector<std::string>& filters) {
  EnumerationOptions e;
  e.n = n;
  e.b_min = b_min;
  e.b_max = b_max;
  e.symmetry = parse_symmetry(opt.symmetry);
  for (const auto& f : filters) e.filters.push_back(parse_filter(f));
  e.node_budget = opt.budget_nodes;
  e.time_budget_seconds = opt.budget_seconds;
  e.crossing_bound = opt.crossing_bound;
  e.jobs = opt.jobs;
  return e;
}

int cmd_enumerate(const Io& io, const EnumerationOptions& e) {
  const EnumerationResult r = enumerate(e);
  if (io.json()) {
    ordered_json diagrams = ordered_json::array();
    for (const auto& ed : r.diagrams)
      diagrams.push_back(ordered_json::parse(emit_document({ed.diagram, {}})));
    io.write(ordered_json{{"n", e.n},
                          {"symmetry", to_string(e.symmetry)},
                          {"complete", r.complete},
                          {"incomplete_reason", r.incomplete_reason},
                          {"count", r.diagrams.size()},
                          {"raw_count", r.raw_count},
                          {"nodes", r.nodes},
                          {"diagrams", diagrams}}
                 .dump() +
             "\n");
  } else {
    std::ostringstream o;
    o << r.diagrams.size() << " diagram" << (r.diagrams.size() == 1 ? "" : "s") << " (n=" << e.n
      << ", symmetry=" << to_string(e.symmetry) << ", raw count " << r.raw_count << ", " << r.nodes << " nodes"
      << (r.complete ? "" : ", INCOMPLETE: " + r.incomplete_reason) << ")\n";
    for (const auto& ed : r.diagrams)
      o << "\nb=" << ed.diagram.size() << " orbit size " << ed.orbit_size << "\n"
        << text_sketch(ed.diagram.grid_number(), ed.diagram.cells());
    io.write(o.str());
  }
  return r.complete ? kExitOk : kExitBudget;
}

int cmd_census(const Io& io, const EnumerationOptions& e) {
  const CensusResult c = census(e);
  if (io.json()) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : c.rows)
      rows.push_back({{"b", r.b},
                      {"orientable", r.orientable},
                      {"euler", r.euler},
                      {"status", to_string(r.status)},
                      {"orbits", r.orbits},
                      {"raw", r.raw}});
    io.write(ordered_json{{"n", e.n},
                          {"symmetry", to_string(e.symmetry)},
                          {"complete", c.complete},
                          {"orbits", c.orbits},
                          {"raw", c.raw},
                          {"rows", rows}}
                 .dump() +
             "\n");
  } else {
    std::ostringstream o;
    o << "census n=" << e.n << " symmetry=" << to_string(e.symmetry) << ": " << c.orbits << " orbits, " << c.raw
      << " diagrams" << (c.complete ? "" : " (INCOMPLETE: " + c.incomplete_reason + ")") << "\n";
    o << "b\torientable\teuler\tstatus\torbits\traw\n";
    for (const auto& r : c.rows)
      o << r.b << '\t' << (r.orientable ? "yes" : "no") << '\t' << r.euler << '\t' << to_string(r.status) << '\t'
        << r.orbits << '\t' << r.raw << '\n';
    io.write(o.str());
  }
  return c.complete ? kExitOk : kExitBudget;
}

int cmd_generate(const Io& io, const std::string& family, int n, int k) {
  DiagramDocument doc;
  if (family == "staircase") {
    doc.diagram = staircase(n);
    doc.metadata["name"] = "staircase(" + std::to_string(n) + ")";
  } else if (family == "squares") {
    doc.diagram = squares_antidiagonal(k);
    doc.metadata["name"] = "squares(" + std::to_string(k) + ")";
  } else if (family == "n2") {
    doc.diagram = example_n2();
    doc.metadata["name"] = "n2";
  } else if (family == "n3") {
    doc.diagram = example_n3();
    doc.metadata["name"] = "n3";
  } else if (family == "trefoil") {
    doc.diagram = trefoil_grid();
    doc.metadata["name"] = "trefoil grid";
  } else if (family == "hopf") {
    doc.diagram = hopf_grid();
    doc.metadata["name"] = "hopf grid";
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  doc.metadata["provenance"] = "trigrid generate";
  io.write(io.text_sketch_requested() ? document_text(doc) : emit_document(doc));
  return kExitOk;
}

int cmd_pushoff(const Io& io) {
  const DiagramDocument src = io.read_document();
  GridDiagram g;
  if (const auto* grid = std::get_if<GridDiagram>(&src.diagram))
    g = *grid;
  else
    g = three_grids(require_combinatorial(src))[0];
  DiagramDocument doc{pushoff(g), {{"provenance", "trigrid pushoff"}}};
  io.write(io.text_sketch_requested() ? document_text(doc) : emit_document(doc));
  return kExitOk;
}

int cmd_render(const Io& io, const std::string& what, const std::string& grid_label) {
  const DiagramDocument doc = io.read_document();
  std::string svg;
  if (what == "diagram") {
    svg = render_svg(require_combinatorial(doc));
  } else if (what == "grid" || what == "front") {
    GridDiagram g;
    if (const auto* grid = std::get_if<GridDiagram>(&doc.diagram))
      g = *grid;
    else
      g = grids_of(doc)[static_cast<int>(parse_color_pair(grid_label))];
    svg = what == "grid" ? render_svg(g) : render_svg(front_polyline(g));
  } else {
    throw UsageError("unknown render target '" + what + "' (expected diagram, grid or front)");
  }
  io.write(svg);
  return kExitOk;
}

int cmd_obstruct(const Io& io, const std::string& claims) {
  const DiagramDocument doc = io.read_document();
  const CombinatorialTGD& d = require_combinatorial(doc);
  const ObstructionVerdict v = obstruction_report(d, claims);
  if (io.json()) {
    io.write(ordered_json{{"fires", v.fires},
                          {"unfillable", ascii_label(v.unfillable)},
                          {"q", v.q},
                          {"nonorientable", v.nonorientable},
                          {"message", v.message},
                          {"warnings", v.warnings}}
                 .dump() +
             "\n");
  } else {
    std::string s = v.message + "\n  q = c1 + c2 + c3 - b = " + std::to_string(v.q) + "\n";
    for (const auto& w : v.warnings) s += "warning: " + w + "\n";
    io.write(s);
  }
  return kExitOk;
}

int default_jobs() {
  if (const char* env = std::getenv("TRIGRID_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (...) {
    }
  }
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triple grid diagrams: validation, invariants, surfaces, enumeration", "trigrid"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions opt;
  opt.jobs = default_jobs();
  app.add_option("--input", opt.input, "Input document (default: standard input)");
  app.add_option("--output", opt.output, "Output file (default: standard output)");
  app.add_option("--format", opt.format, "Output format (default: json for generate/pushoff, text otherwise)")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--symmetry", opt.symmetry, "Symmetry group for enumeration")
      ->check(CLI::IsMember({"none", "t", "tr", "trr"}));
  app.add_option("--jobs", opt.jobs, "Worker threads (default: TRIGRID_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--crossing-bound", opt.crossing_bound, "Maximum crossings for bracket computations")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--budget-nodes", opt.budget_nodes, "Search node budget")->check(CLI::PositiveNumber);
  app.add_option("--budget-seconds", opt.budget_seconds, "Search time budget")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Validate a diagram document");
  auto* grids = app.add_subcommand("grids", "Print the three grid diagrams");
  auto* analyze_cmd = app.add_subcommand("analyze", "Links, tb, rotation numbers, unlink verdicts, surface");
  auto* classify_cmd = app.add_subcommand("classify", "Surface classification and fillability status");

  int n = 0, b_min = 1, b_max = -1, k = 1;
  std::vector<std::string> filters;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate diagrams up to symmetry");
  auto* census_cmd = app.add_subcommand("census", "Counts by (b, orientability, euler, status)");
  for (auto* sub : {enumerate_cmd, census_cmd}) {
    sub->add_option("--n", n, "Grid number")->required()->check(CLI::PositiveNumber);
    sub->add_option("--b-min", b_min, "Minimum size b (default 1)");
    sub->add_option("--b-max", b_max, "Maximum size b (default n)");
    sub->add_option("--filter", filters, "simple, lagrangian-eligible, immersed-eligible, orientable, ...");
  }

  std::string family;
  auto* generate = app.add_subcommand("generate", "Generate a named diagram family member");
  generate->add_option("--family", family, "staircase, squares, n2, n3, trefoil, hopf")
      ->required()
      ->check(CLI::IsMember({"staircase", "squares", "n2", "n3", "trefoil", "hopf"}));
  generate->add_option("--n", n, "Grid number (staircase)");
  generate->add_option("--k", k, "Number of squares (squares, odd)");

  auto* pushoff_cmd = app.add_subcommand("pushoff", "Legendrian plus pushoff construction");

  std::string what = "diagram", grid_label = "ab";
  auto* render = app.add_subcommand("render", "SVG rendering");
  render->add_option("--what", what, "diagram, grid or front");
  render->add_option("--grid", grid_label, "Which grid for --what grid/front: ab, bg, ga");

  std::string claims;
  auto* obstruct = app.add_subcommand("obstruct", "Slice-disk fillability obstruction");
  obstruct->add_option("--claim", claims, "Two links claimed fillable, e.g. ab,bg")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const Io io{in, out, opt};
  try {
    if (*validate) return cmd_validate(io);
    if (*grids) return cmd_grids(io);
    if (*analyze_cmd) return cmd_analyze(io);
    if (*classify_cmd) return cmd_classify(io);
    if (*enumerate_cmd) return cmd_enumerate(io, enumeration_options(opt, n, b_min, b_max, filters));
    if (*census_cmd) return cmd_census(io, enumeration_options(opt, n, b_min, b_max, filters));
    if (*generate) return cmd_generate(io, family, n, k);
    if (*pushoff_cmd) return cmd_pushoff(io);
    if (*render) return cmd_render(io, what, grid_label);
    if (*obstruct) return cmd_obstruct(io, claims);
  } catch (const ValidationError& e) {
    err << "invalid diagram: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const SchemaError& e) {
    err << "malformed document: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace trigrid
