#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcongr/catalog.hpp"

namespace qcongr::suite {

enum class CellStatus { Holds, Fails, IllFormed, Skipped };
std::string_view to_string(CellStatus s);

struct GridCell {
  StatementId id;
  CellStatus status = CellStatus::Skipped;
  std::optional<Witness> witness;
  std::string detail;
  bool exploratory = false;
  double millis = 0.0;
};

struct GridSummary {
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t illformed = 0;
  std::size_t skipped = 0;
};

struct GridReport {
  std::vector<GridCell> cells;

  GridSummary summary() const;
  /// True when some non-exploratory cell is Fails or IllFormed.
  bool has_gating_failure() const;
};

struct GridOptions {
  std::vector<StatementKind> statements;
  unsigned long n_lo = 1;
  unsigned long n_hi = 1;
  long r_lo = 1;
  long r_hi = 1;
  unsigned jobs = 1;
  QObjectCache* cache = nullptr;  // shared cache when null
};

/// Cells in canonical order: catalog order, then n, r, aux. Statements
/// without r get one cell per n; NEW4 and BINOM_STEP add k in 0..n-1,
/// NEW2_ORDER2/3 add s in 0..3n.
std::vector<StatementId> enumerate_cells(const GridOptions& options);

/// A cell is exploratory when its statement is, or when it uses r < 0.
bool is_exploratory(const StatementId& id);

/// Evaluates one cell; std::invalid_argument from the builders becomes
/// Skipped, anything else propagates.
GridCell run_cell(const StatementId& id, QObjectCache& cache);

/// Runs every cell on `jobs` worker threads after pre-populating the
/// cyclotomic cache. Cell order in the report is canonical regardless of
/// completion order.
GridReport run_grid(const GridOptions& options);

}  // namespace qcongr::suite
