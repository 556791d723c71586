#pragma once

// Grammar-driven random expressions for round-trip and evaluation tests.

#include <random>
#include <string>

#include "qcongr/dsl/ast.hpp"
#include "qcongr/dsl/parser.hpp"

namespace support {

class AstGenerator {
 public:
  explicit AstGenerator(std::uint64_t seed) : rng_(seed) {}

  /// Any syntactically valid expression up to the given depth.
  qcongr::dsl::Expr expr(int depth) {
    using qcongr::dsl::NodeKind;
    using qcongr::dsl::make_node;
    if (depth <= 0) return leaf();
    switch (pick(12)) {
      case 0:
      case 1: return leaf();
      case 2: return make_node(NodeKind::Add, {expr(depth - 1), expr(depth - 1)});
      case 3: return make_node(NodeKind::Sub, {expr(depth - 1), expr(depth - 1)});
      case 4: return make_node(NodeKind::Mul, {expr(depth - 1), expr(depth - 1)});
      case 5: return make_node(NodeKind::Div, {expr(depth - 1), expr(depth - 1)});
      case 6: return make_node(NodeKind::Neg, {expr(depth - 1)});
      case 7: return make_node(NodeKind::Pow, {expr(depth - 1), expr(depth - 1)});
      case 8: return qcongr::dsl::make_sum(var(), expr(depth - 1), expr(depth - 1), expr(depth - 1));
      case 9: return make_node(NodeKind::QBin, {expr(depth - 1), expr(depth - 1)});
      case 10: return make_node(pick(2) ? NodeKind::QInt : NodeKind::QPoch, {expr(depth - 1)});
      default: return make_node(NodeKind::Cyc, {expr(depth - 1)});
    }
  }

  /// Closed expressions in q and small constants with small integer powers.
  qcongr::dsl::Expr numeric(int depth) {
    using qcongr::dsl::NodeKind;
    using qcongr::dsl::make_int;
    using qcongr::dsl::make_node;
    if (depth <= 0 || pick(4) == 0) {
      switch (pick(3)) {
        case 0: return make_int(pick(5));
        case 1: return qcongr::dsl::make_q();
        default: return make_node(NodeKind::QInt, {make_int(1 + pick(4))});
      }
    }
    if (pick(6) == 0) {
      qcongr::dsl::Expr e = make_int(pick(3));
      if (pick(2)) e = make_node(NodeKind::Neg, {e});
      return make_node(NodeKind::Pow, {numeric(depth - 1), e});
    }
    const NodeKind ops[] = {NodeKind::Add, NodeKind::Sub, NodeKind::Mul, NodeKind::Div};
    return make_node(ops[pick(4)], {numeric(depth - 1), numeric(depth - 1)});
  }

  unsigned long pick(unsigned long n) { return rng_() % n; }

 private:
  qcongr::dsl::Expr leaf() {
    switch (pick(3)) {
      case 0: return qcongr::dsl::make_int(pick(1000));
      case 1: return qcongr::dsl::make_var(var());
      default: return qcongr::dsl::make_q();
    }
  }
  std::string var() {
    static const char* names[] = {"n", "k", "j", "r", "s", "x1", "foo_bar"};
    return names[pick(7)];
  }

  std::mt19937_64 rng_;
};

/// Formats and reparses `count` random expressions; returns the number
/// that failed to come back structurally identical.
inline int round_trip_failures(std::uint64_t seed, int count, int max_depth = 6) {
  AstGenerator gen(seed);
  int bad = 0;
  for (int i = 0; i < count; ++i) {
    const auto e = gen.expr(static_cast<int>(gen.pick(static_cast<unsigned long>(max_depth) + 1)));
    const std::string text = qcongr::dsl::format(e);
    try {
      const auto back = qcongr::dsl::parse_expression(text);
      if (!qcongr::dsl::structurally_equal(back, e) || qcongr::dsl::format(back) != text) ++bad;
    } catch (const qcongr::dsl::DslError&) {
      ++bad;
    }
  }
  return bad;
}

}  // namespace support
