#include "qcongr/grid.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qcongr::suite {

std::string_view to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Holds: return "Holds";
    case CellStatus::Fails: return "Fails";
    case CellStatus::IllFormed: return "IllFormed";
    case CellStatus::Skipped: return "Skipped";
  }
  return "?";
}

GridSummary GridReport::summary() const {
  GridSummary s;
  for (const auto& c : cells) {
    switch (c.status) {
      case CellStatus::Holds: ++s.holds; break;
      case CellStatus::Fails: ++s.fails; break;
      case CellStatus::IllFormed: ++s.illformed; break;
      case CellStatus::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

bool GridReport::has_gating_failure() const {
  return std::any_of(cells.begin(), cells.end(), [](const GridCell& c) {
    return !c.exploratory && (c.status == CellStatus::Fails || c.status == CellStatus::IllFormed);
  });
}

std::vector<StatementId> enumerate_cells(const GridOptions& options) {
  if (options.n_lo == 0 || options.n_lo > options.n_hi) throw std::invalid_argument("empty or invalid n range");
  if (options.r_lo > options.r_hi) throw std::invalid_argument("empty r range");
  std::vector<StatementId> ids;
  for (const auto& info : statement_catalog()) {
    if (std::find(options.statements.begin(), options.statements.end(), info.kind) == options.statements.end()) {
      continue;
    }
    for (unsigned long n = options.n_lo; n <= options.n_hi; ++n) {
      std::vector<std::optional<long>> rs;
      if (info.uses_r) {
        for (long r = options.r_lo; r <= options.r_hi; ++r) rs.emplace_back(r);
      } else {
        rs.emplace_back(std::nullopt);
      }
      for (const auto& r : rs) {
        switch (info.aux) {
          case AuxParam::None: ids.push_back({info.kind, n, r, std::nullopt}); break;
          case AuxParam::K:
            for (unsigned long k = 0; k < n; ++k) ids.push_back({info.kind, n, r, k});
            break;
          case AuxParam::S:
            for (unsigned long s = 0; s <= 3 * n; ++s) ids.push_back({info.kind, n, r, s});
            break;
        }
      }
    }
  }
  return ids;
}

bool is_exploratory(const StatementId& id) {
  return statement_info(id.kind).exploratory || (id.r && *id.r < 0);
}

GridCell run_cell(const StatementId& id, QObjectCache& cache) {
  GridCell cell;
  cell.id = id;
  cell.exploratory = is_exploratory(id);
  const auto start = std::chrono::steady_clock::now();
  try {
    Verdict v = verify_statement(id, cache);
    switch (v.status) {
      case Status::Holds: cell.status = CellStatus::Holds; break;
      case Status::Fails: cell.status = CellStatus::Fails; break;
      case Status::IllFormed: cell.status = CellStatus::IllFormed; break;
    }
    cell.witness = v.witness;
    cell.detail = std::move(v.detail);
  } catch (const std::invalid_argument& e) {
    cell.status = CellStatus::Skipped;
    cell.detail = e.what();
  }
  cell.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return cell;
}

GridReport run_grid(const GridOptions& options) {
  if (options.jobs == 0) throw std::invalid_argument("jobs must be at least 1");
  QObjectCache& cache = options.cache ? *options.cache : QObjectCache::shared();
  const std::vector<StatementId> ids = enumerate_cells(options);
  cache.prepopulate(2 * options.n_hi + 1);

  GridReport report;
  report.cells.resize(ids.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= ids.size()) return;
      try {
        report.cells[i] = run_cell(ids[i], cache);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(ids.size());
        return;
      }
    }
  };

  const unsigned workers = std::min<std::size_t>(options.jobs, std::max<std::size_t>(ids.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return report;
}

}  // namespace qcongr::suite
