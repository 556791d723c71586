#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcongr/congruence.hpp"
#include "qcongr/papersuite.hpp"

namespace qcongr::suite {

enum class StatementKind {
  AA2,
  AA3,
  AA4,
  AA5,
  A1,
  CONJ1,
  B4,
  B5,
  NEW4,
  BINOM_STEP,
  B1,
  B2,
  B3,
  B6,
  NEW2_ORDER2,
  NEW2_ORDER3,
  NEW3,
  B9,
  B10_VS_B9,
  B11,
  GUGUO_OPEN,
};

/// Which auxiliary index a statement ranges over: k in 0..n-1, s in 0..3n.
enum class AuxParam { None, K, S };

struct StatementInfo {
  StatementKind kind;
  std::string_view name;
  bool uses_r;
  AuxParam aux;
  bool exploratory;     // reported, never gates an exit code
  bool exact_identity;  // checked as an equality, not a congruence
  bool integer_check;   // no polynomial sides (AA2)
};

/// Every statement, in canonical report order.
const std::vector<StatementInfo>& statement_catalog();
const StatementInfo& statement_info(StatementKind kind);
std::optional<StatementKind> parse_statement_name(std::string_view name);

struct StatementId {
  StatementKind kind;
  unsigned long n;
  std::optional<long> r;
  std::optional<unsigned long> aux;

  /// e.g. "CONJ1(n=5,r=2)" or "NEW4(n=7,k=3)"
  std::string label() const;
  friend bool operator==(const StatementId&, const StatementId&) = default;
};

struct StatementSides {
  RatFunc lhs;
  RatFunc rhs;
  FactoredModulus modulus;  // empty for exact identities
};

/// The two sides and modulus of a statement instance. Throws
/// std::invalid_argument for AA2, for AA3 at n not a prime power, and for
/// missing or out-of-range parameters.
StatementSides statement_sides(const StatementId& id, QObjectCache& cache = QObjectCache::shared());

/// Decides one statement instance. Exact identities that differ report
/// Fails with required = inf at factor n.
Verdict verify_statement(const StatementId& id, QObjectCache& cache = QObjectCache::shared());

/// The statement written in the DSL with free parameters n, r, k or s, or
/// nullopt when it has no single-congruence rendering.
std::optional<std::string> dsl_rendering(StatementKind kind);

}  // namespace qcongr::suite
