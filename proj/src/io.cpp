#include "trigrid/io.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace trigrid {

using nlohmann::json;

namespace {

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where + "/" + key, "missing field");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where, "expected an integer");
  return j.get<int>();
}

std::vector<Cell> int_pairs(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw SchemaError(where, "expected an array of [i, j] pairs");
  std::vector<Cell> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string at = where + "/" + std::to_string(k);
    if (!arr[k].is_array() || arr[k].size() != 2) throw SchemaError(at, "expected a pair [i, j]");
    out.push_back({as_int(arr[k][0], at + "/0"), as_int(arr[k][1], at + "/1")});
  }
  return out;
}

Rational as_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw SchemaError(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(where, std::string("bad rational: ") + e.what());
  }
}

json cells_json(const std::vector<Cell>& cells) {
  json arr = json::array();
  for (Cell c : cells) arr.push_back({c.col, c.row});
  return arr;
}

}  // namespace

DiagramDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError("line " + std::to_string(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1)), e.what());
  }
  if (!j.is_object()) throw SchemaError("", "document must be a JSON object");

  if (auto it = j.find("schema"); it != j.end()) {
    if (as_int(*it, "/schema") != kSchemaVersion)
      throw SchemaError("/schema", "unsupported schema version " + it->dump());
  }
  const json& type = field(j, "type", "");
  if (!type.is_string()) throw SchemaError("/type", "expected a string");

  DiagramDocument doc;
  if (auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) throw SchemaError("/metadata", "expected an object");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_string()) throw SchemaError("/metadata/" + k, "expected a string");
      doc.metadata[k] = v.get<std::string>();
    }
  }

  const std::string t = type.get<std::string>();
  if (t == "combinatorial") {
    const int n = as_int(field(j, "n", ""), "/n");
    if (n < 1) throw SchemaError("/n", "grid number must be positive");
    const auto cells = int_pairs(field(j, "cells", ""), "/cells");
    doc.diagram = validate_combinatorial(n, cells);
  } else if (t == "grid") {
    const int n = as_int(field(j, "n", ""), "/n");
    if (n < 1) throw SchemaError("/n", "grid number must be positive");
    doc.diagram = GridDiagram(n, int_pairs(field(j, "points", ""), "/points"));
  } else if (t == "geometric") {
    const json& arr = field(j, "points", "");
    if (!arr.is_array()) throw SchemaError("/points", "expected an array of [x, y] pairs");
    std::vector<GeoPoint> pts;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string at = "/points/" + std::to_string(k);
      if (!arr[k].is_array() || arr[k].size() != 2) throw SchemaError(at, "expected a pair [x, y]");
      pts.push_back({as_rational(arr[k][0], at + "/0"), as_rational(arr[k][1], at + "/1")});
    }
    doc.diagram = validate_geometric(std::move(pts));
  } else {
    throw SchemaError("/type", "unknown diagram type '" + t + "'");
  }
  return doc;
}

std::string emit_document(const DiagramDocument& doc) {
  json j;
  j["schema"] = kSchemaVersion;
  if (const auto* d = std::get_if<CombinatorialTGD>(&doc.diagram)) {
    j["type"] = "combinatorial";
    j["n"] = d->grid_number();
    j["cells"] = cells_json(d->cells());
  } else if (const auto* g = std::get_if<GridDiagram>(&doc.diagram)) {
    j["type"] = "grid";
    j["n"] = g->grid_number();
    j["points"] = cells_json(g->points());
  } else {
    const auto& geo = std::get<GeometricTGD>(doc.diagram);
    j["type"] = "geometric";
    json arr = json::array();
    for (const GeoPoint& p : geo.points()) arr.push_back({to_string(p.x), to_string(p.y)});
    j["points"] = std::move(arr);
  }
  if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
  return j.dump() + "\n";
}

std::string text_sketch(int n, const std::vector<Cell>& cells) {
  const std::set<Cell> occupied(cells.begin(), cells.end());
  std::string s;
  for (int row = n - 1; row >= 0; --row) {
    for (int col = 0; col < n; ++col) {
      if (col) s += ' ';
      s += occupied.contains(Cell{col, row}) ? "•" : "·";
    }
    s += '\n';
  }
  return s;
}

}  // namespace trigrid
