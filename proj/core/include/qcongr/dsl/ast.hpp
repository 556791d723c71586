#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcongr/int_poly.hpp"

namespace qcongr::dsl {

/// 1-based line and column (columns count code points); offset is in bytes.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;
};

enum class ErrorKind {
  Lexical,
  Syntax,
  UnknownFunction,
  Arity,
  Modulus,
  UnboundVariable,
  NotInteger,
  DivisionByZero,
  Domain,
};

class DslError : public std::runtime_error {
 public:
  DslError(ErrorKind kind, SourcePos pos, const std::string& message);
  ErrorKind kind() const { return kind_; }
  const SourcePos& pos() const { return pos_; }
  /// The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  SourcePos pos_;
  std::string message_;
};

enum class NodeKind { IntLit, Var, Q, Add, Sub, Mul, Div, Neg, Pow, Sum, QBin, QInt, QPoch, Cyc };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind;
  Integer value;              // IntLit, always >= 0
  std::string name;           // Var, and the bound variable of Sum
  std::vector<Expr> children;  // operands; Sum holds lo, hi, body
  SourcePos pos;
};

Expr make_int(Integer value, SourcePos pos = {});
Expr make_var(std::string name, SourcePos pos = {});
Expr make_q(SourcePos pos = {});
Expr make_node(NodeKind kind, std::vector<Expr> children, SourcePos pos = {});
Expr make_sum(std::string var, Expr lo, Expr hi, Expr body, SourcePos pos = {});

/// Equality of shape and payload, ignoring source positions.
bool structurally_equal(const Expr& a, const Expr& b);
std::set<std::string> free_variables(const Expr& e);

/// Canonical text with the fewest parentheses the grammar needs.
std::string format(const Expr& e);

struct ModFactor {
  enum class Kind { Cyc, QInt };
  Kind kind;
  Expr arg;
  Integer exponent{1};
  SourcePos pos;
};

struct Statement {
  Expr lhs;
  Expr rhs;
  std::vector<ModFactor> modulus;
};

bool structurally_equal(const Statement& a, const Statement& b);
std::set<std::string> free_variables(const Statement& s);
/// "lhs === rhs mod cyc(n)^2 * qint(n)"
std::string format(const Statement& s);

}  // namespace qcongr::dsl
