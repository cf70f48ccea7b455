#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "trigrid/core.hpp"
#include "trigrid/geometric.hpp"

namespace trigrid {

inline constexpr int kSchemaVersion = 1;

/// A versioned diagram file. JSON shapes:
///   {"schema":1,"type":"combinatorial","n":2,"cells":[[0,0],...]}
///   {"schema":1,"type":"geometric","points":[["1/8","1/8"],...]}
///   {"schema":1,"type":"grid","n":5,"points":[[0,0],...]}
/// with an optional "metadata" object of string values (name, provenance).
struct DiagramDocument {
  std::variant<CombinatorialTGD, GeometricTGD, GridDiagram> diagram;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const DiagramDocument&, const DiagramDocument&) = default;
};

/// Throws SchemaError (with line or JSON-pointer location) for malformed
/// input and ValidationError subclasses for invalid diagrams.
DiagramDocument parse_document(std::string_view text);
/// Compact JSON with keys in sorted order, newline-terminated.
std::string emit_document(const DiagramDocument& doc);

/// Rows from top (j = n - 1) to bottom, '•' for occupied cells, '·' otherwise.
std::string text_sketch(int n, const std::vector<Cell>& cells);

}  // namespace trigrid
