#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigrid/core.hpp"
#include "trigrid/surface.hpp"

namespace trigrid {

enum class Filter { simple, lagrangian_eligible, immersed_eligible, orientable, nonorientable, connected };

const char* to_string(Filter f);
Filter parse_filter(std::string_view text);

struct EnumerationOptions {
  int n = 1;
  int b_min = 1;   // the empty diagram is excluded unless b_min = 0
  int b_max = -1;  // -1: up to n
  SymmetryGroup symmetry = SymmetryGroup::none;
  std::vector<Filter> filters;
  std::uint64_t node_budget = 100'000'000;
  double time_budget_seconds = 60.0;
  int crossing_bound = kDefaultCrossingBound;
  int jobs = 1;
};

struct EnumeratedDiagram {
  CombinatorialTGD diagram;  // canonical representative
  std::size_t orbit_size = 1;
};

struct EnumerationResult {
  std::vector<EnumeratedDiagram> diagrams;  // ascending canonical order
  std::size_t raw_count = 0;                // labelled diagrams in the emitted orbits
  std::size_t search_solutions = 0;         // labelled diagrams found before filtering
  std::uint64_t nodes = 0;
  bool complete = true;
  std::string incomplete_reason;

  /// Throws BudgetExceeded when the search stopped early.
  void require_complete() const;
};

/// Row-by-row search (each row empty or a pair of columns) with column and
/// diagonal count pruning, then one canonical representative per orbit.
/// Budget exhaustion never throws; it is recorded in the result.
EnumerationResult enumerate(const EnumerationOptions& opts);

struct CensusRow {
  int b = 0;
  bool orientable = true;
  int euler = 0;
  FillabilityStatus status = FillabilityStatus::general;
  std::size_t orbits = 0;
  std::size_t raw = 0;
};

struct CensusResult {
  std::vector<CensusRow> rows;  // sorted by (b, orientable, euler, status)
  std::size_t orbits = 0;
  std::size_t raw = 0;
  bool complete = true;
  std::string incomplete_reason;
};

CensusResult census(const EnumerationOptions& opts);

using WitnessPredicate = std::function<bool(const CombinatorialTGD&, const DiagramAnalysis&)>;

struct WitnessResult {
  std::optional<CombinatorialTGD> witness;
  std::optional<DiagramAnalysis> analysis;
  bool complete = true;
};

/// First canonical diagram (in enumeration order) satisfying the predicate.
WitnessResult find_witness(const WitnessPredicate& pred, const EnumerationOptions& opts);

}  // namespace trigrid
