#include "trigrid/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

namespace trigrid {

const char* to_string(Filter f) {
  switch (f) {
    case Filter::simple: return "simple";
    case Filter::lagrangian_eligible: return "lagrangian-eligible";
    case Filter::immersed_eligible: return "immersed-eligible";
    case Filter::orientable: return "orientable";
    case Filter::nonorientable: return "nonorientable";
    case Filter::connected: return "connected";
  }
  return "?";
}

Filter parse_filter(std::string_view text) {
  for (Filter f : {Filter::simple, Filter::lagrangian_eligible, Filter::immersed_eligible, Filter::orientable,
                   Filter::nonorientable, Filter::connected})
    if (text == to_string(f)) return f;
  throw InvalidParameter("unknown filter '" + std::string(text) + "'");
}

void EnumerationResult::require_complete() const {
  if (!complete) throw BudgetExceeded("enumeration incomplete: " + incomplete_reason);
}

namespace {

using Clock = std::chrono::steady_clock;

struct SharedBudget {
  std::uint64_t node_limit;
  Clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::mutex reason_mutex;
  std::string reason;

  void abort(std::string why) {
    std::lock_guard lock(reason_mutex);
    if (!aborted.exchange(true)) reason = std::move(why);
  }
};

class RowSearch {
 public:
  RowSearch(int n, int b_min, int b_max, SharedBudget& budget)
      : n_(n), b_min_(b_min), b_max_(b_max), budget_(budget), cols_(n, 0), diags_(n, 0) {
    choices_.push_back({-1, -1});
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) choices_.push_back({a, b});
  }

  int choice_count() const { return static_cast<int>(choices_.size()); }

  /// Runs the subtree whose first row uses choice `first`.
  void run_from(int first, std::vector<std::vector<Cell>>& out) {
    out_ = &out;
    place_row(0, first);
  }

 private:
  bool tick() {
    if (budget_.aborted.load(std::memory_order_relaxed)) return false;
    const std::uint64_t k = budget_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (k > budget_.node_limit) {
      budget_.abort("node budget of " + std::to_string(budget_.node_limit) + " exhausted");
      return false;
    }
    if ((++local_ & 1023) == 0 && Clock::now() > budget_.deadline) {
      budget_.abort("time budget exhausted");
      return false;
    }
    return true;
  }

  void place_row(int row, int choice) {
    if (!tick()) return;
    const auto [a, b] = choices_[choice];
    const bool occupied = a >= 0;
    if (occupied) {
      if (cols_[a] == 2 || cols_[b] == 2) return;
      const int da = (a + row) % n_, db = (b + row) % n_;
      if (diags_[da] == 2 || diags_[db] == 2) return;  // da != db since a != b
      bump(a, da, +1);
      bump(b, db, +1);
      cells_.push_back({a, row});
      cells_.push_back({b, row});
    }

    const int remaining = n_ - 1 - row;
    const int points = static_cast<int>(cells_.size());
    const bool feasible = col_ones_ <= 2 * remaining && diag_ones_ <= 2 * remaining &&
                          points / 2 <= b_max_ && points / 2 + remaining >= b_min_;
    if (feasible) {
      if (remaining == 0) {
        if (col_ones_ == 0 && diag_ones_ == 0) out_->push_back(cells_);
      } else {
        for (int c = 0; c < choice_count(); ++c) place_row(row + 1, c);
      }
    }

    if (occupied) {
      cells_.resize(cells_.size() - 2);
      bump(a, (a + row) % n_, -1);
      bump(b, (b + row) % n_, -1);
    }
  }

  void bump(int col, int diag, int delta) {
    col_ones_ -= cols_[col] == 1;
    cols_[col] += delta;
    col_ones_ += cols_[col] == 1;
    diag_ones_ -= diags_[diag] == 1;
    diags_[diag] += delta;
    diag_ones_ += diags_[diag] == 1;
  }

  int n_;
  int b_min_;
  int b_max_;
  SharedBudget& budget_;
  std::vector<std::pair<int, int>> choices_;
  std::vector<int> cols_;
  std::vector<int> diags_;
  int col_ones_ = 0;
  int diag_ones_ = 0;
  std::vector<Cell> cells_;
  std::vector<std::vector<Cell>>* out_ = nullptr;
  std::uint64_t local_ = 0;
};

bool needs_fillability(const std::vector<Filter>& filters) {
  return std::any_of(filters.begin(), filters.end(), [](Filter f) {
    return f == Filter::simple || f == Filter::lagrangian_eligible || f == Filter::immersed_eligible;
  });
}

bool passes(const std::vector<Filter>& filters, const SurfaceReport& s, const FillabilityReport* fill) {
  for (Filter f : filters) {
    switch (f) {
      case Filter::simple:
        if (!fill->all_unlink) return false;
        break;
      case Filter::lagrangian_eligible:
        if (fill->status != FillabilityStatus::lagrangian_eligible) return false;
        break;
      case Filter::immersed_eligible:
        if (!fill->all_rot_zero) return false;
        break;
      case Filter::orientable:
        if (!s.orientable) return false;
        break;
      case Filter::nonorientable:
        if (s.orientable) return false;
        break;
      case Filter::connected:
        if (!s.connected()) return false;
        break;
    }
  }
  return true;
}

}  // namespace

EnumerationResult enumerate(const EnumerationOptions& opts) {
  if (opts.n < 1) throw InvalidParameter("n must be positive");
  if (opts.node_budget == 0 || opts.time_budget_seconds <= 0) throw InvalidParameter("budgets must be positive");
  const int n = opts.n;
  const int b_max = opts.b_max < 0 ? n : std::min(opts.b_max, n);
  const int b_min = std::max(0, opts.b_min);

  SharedBudget budget;
  budget.node_limit = opts.node_budget;
  budget.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(opts.time_budget_seconds));

  const int choices = 1 + n * (n - 1) / 2;
  const int jobs = std::clamp(opts.jobs, 1, choices);
  std::vector<std::vector<std::vector<Cell>>> found(choices);
  std::atomic<int> next{0};
  auto worker = [&] {
    RowSearch search(n, b_min, b_max, budget);
    for (int c = next++; c < choices; c = next++) search.run_from(c, found[c]);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  EnumerationResult r;
  r.nodes = std::min(budget.nodes.load(), budget.node_limit);
  r.complete = !budget.aborted.load();
  r.incomplete_reason = budget.reason;

  std::map<CombinatorialTGD, std::size_t> orbits;
  for (const auto& part : found) {
    for (const auto& cells : part) {
      ++r.search_solutions;
      const CombinatorialTGD d = validate_combinatorial(n, cells);
      const CombinatorialTGD canon = canonicalize(d, opts.symmetry);
      if (!orbits.contains(canon)) orbits.emplace(canon, orbit(canon, opts.symmetry).size());
    }
  }

  const bool fill_needed = needs_fillability(opts.filters);
  for (const auto& [canon, size] : orbits) {
    if (!opts.filters.empty()) {
      const SurfaceReport s = classify(canon);
      std::optional<FillabilityReport> fill;
      if (fill_needed) fill = fillability_status(canon, opts.crossing_bound);
      if (!passes(opts.filters, s, fill ? &*fill : nullptr)) continue;
    }
    r.diagrams.push_back({canon, size});
    r.raw_count += size;
  }
  return r;
}

CensusResult census(const EnumerationOptions& opts) {
  const EnumerationResult e = enumerate(opts);
  CensusResult c;
  c.complete = e.complete;
  c.incomplete_reason = e.incomplete_reason;
  std::map<std::tuple<int, bool, int, FillabilityStatus>, CensusRow> rows;
  for (const EnumeratedDiagram& ed : e.diagrams) {
    const SurfaceReport s = classify(ed.diagram);
    const FillabilityReport f = fillability_status(ed.diagram, opts.crossing_bound);
    CensusRow& row = rows[{s.b, s.orientable, s.euler, f.status}];
    row.b = s.b;
    row.orientable = s.orientable;
    row.euler = s.euler;
    row.status = f.status;
    ++row.orbits;
    row.raw += ed.orbit_size;
    ++c.orbits;
    c.raw += ed.orbit_size;
  }
  for (auto& [key, row] : rows) c.rows.push_back(row);
  return c;
}

WitnessResult find_witness(const WitnessPredicate& pred, const EnumerationOptions& opts) {
  const EnumerationResult e = enumerate(opts);
  WitnessResult w;
  w.complete = e.complete;
  for (const EnumeratedDiagram& ed : e.diagrams) {
    DiagramAnalysis a = analyze(ed.diagram, opts.crossing_bound);
    if (pred(ed.diagram, a)) {
      w.witness = ed.diagram;
      w.analysis = std::move(a);
      break;
    }
  }
  return w;
}

}  // namespace trigrid
