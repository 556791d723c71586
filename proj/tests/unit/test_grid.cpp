#include <gtest/gtest.h>

#include "qcongr/grid.hpp"

using namespace qcongr;
using namespace qcongr::suite;
using K = StatementKind;

namespace {

GridOptions options(std::vector<K> kinds, unsigned long n_lo, unsigned long n_hi, long r_lo, long r_hi,
                    unsigned jobs = 1) {
  GridOptions o;
  o.statements = std::move(kinds);
  o.n_lo = n_lo;
  o.n_hi = n_hi;
  o.r_lo = r_lo;
  o.r_hi = r_hi;
  o.jobs = jobs;
  return o;
}

bool same_cells(const GridReport& a, const GridReport& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const auto& x = a.cells[i];
    const auto& y = b.cells[i];
    if (!(x.id == y.id) || x.status != y.status || x.witness != y.witness || x.detail != y.detail ||
        x.exploratory != y.exploratory) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST(Grid, EnumerationOrderAndShape) {
  const auto cells = enumerate_cells(options({K::NEW2_ORDER2, K::AA4, K::CONJ1, K::NEW4}, 2, 3, 1, 2));
  // Catalog order regardless of request order.
  ASSERT_FALSE(cells.empty());
  EXPECT_EQ(cells.front().kind, K::AA4);
  EXPECT_EQ(cells.back().kind, K::NEW2_ORDER2);
  std::size_t aa4 = 0, conj = 0, new4 = 0, new2 = 0;
  for (const auto& c : cells) {
    switch (c.kind) {
      case K::AA4: ++aa4; EXPECT_FALSE(c.r); EXPECT_FALSE(c.aux); break;
      case K::CONJ1: ++conj; EXPECT_TRUE(c.r); EXPECT_FALSE(c.aux); break;
      case K::NEW4: ++new4; EXPECT_FALSE(c.r); ASSERT_TRUE(c.aux); EXPECT_LT(*c.aux, c.n); break;
      case K::NEW2_ORDER2: ++new2; ASSERT_TRUE(c.aux); EXPECT_LE(*c.aux, 3 * c.n); break;
      default: ADD_FAILURE();
    }
  }
  EXPECT_EQ(aa4, 2u);
  EXPECT_EQ(conj, 4u);
  EXPECT_EQ(new4, 2u + 3u);
  EXPECT_EQ(new2, 7u + 10u);
  EXPECT_EQ(cells[1].label(), "AA4(n=3)");
  EXPECT_EQ(cells[2].label(), "CONJ1(n=2,r=1)");
  EXPECT_EQ(cells[3].label(), "CONJ1(n=2,r=2)");
}

TEST(Grid, ExploratoryFlag) {
  EXPECT_TRUE(is_exploratory({K::GUGUO_OPEN, 4, {}, {}}));
  EXPECT_TRUE(is_exploratory({K::CONJ1, 4, -1, {}}));
  EXPECT_FALSE(is_exploratory({K::CONJ1, 4, 0, {}}));
  EXPECT_FALSE(is_exploratory({K::B4, 4, {}, {}}));
}

TEST(Grid, SmallGridHolds) {
  std::vector<K> all;
  for (const auto& info : statement_catalog()) all.push_back(info.kind);
  const GridReport rep = run_grid(options(all, 2, 7, 1, 2));
  const auto s = rep.summary();
  EXPECT_EQ(s.fails, 0u);
  EXPECT_EQ(s.illformed, 0u);
  // AA3 at 6 is the only skipped cell (not a prime power).
  EXPECT_EQ(s.skipped, 1u);
  EXPECT_EQ(s.holds + s.skipped, rep.cells.size());
  EXPECT_FALSE(rep.has_gating_failure());
  for (const auto& c : rep.cells) {
    if (c.status == CellStatus::Skipped) EXPECT_EQ(c.id.label(), "AA3(n=6)");
  }
}

TEST(Grid, ParallelRunsAreIdentical) {
  const auto base = options({K::AA4, K::CONJ1, K::B4, K::B9, K::GUGUO_OPEN}, 1, 10, -1, 2);
  const GridReport one = run_grid(base);
  for (unsigned jobs : {2u, 8u}) {
    auto o = base;
    o.jobs = jobs;
    EXPECT_TRUE(same_cells(one, run_grid(o))) << "jobs=" << jobs;
  }
}

TEST(Grid, GatingIgnoresExploratoryCells) {
  GridReport rep;
  GridCell c;
  c.id = {K::GUGUO_OPEN, 4, {}, {}};
  c.status = CellStatus::Fails;
  c.exploratory = true;
  rep.cells.push_back(c);
  EXPECT_FALSE(rep.has_gating_failure());
  c.id = {K::CONJ1, 4, 1, {}};
  c.exploratory = false;
  rep.cells.push_back(c);
  EXPECT_TRUE(rep.has_gating_failure());
  c.status = CellStatus::IllFormed;
  rep.cells.back() = c;
  EXPECT_TRUE(rep.has_gating_failure());
}

TEST(Grid, RunCellSkipsUnsupportedParameters) {
  QObjectCache cache;
  const GridCell c = run_cell({K::AA3, 12, {}, {}}, cache);
  EXPECT_EQ(c.status, CellStatus::Skipped);
  EXPECT_FALSE(c.detail.empty());
}
