#pragma once

#include <string_view>
#include <variant>

#include "qcongr/dsl/ast.hpp"

namespace qcongr::dsl {

Expr parse_expression(std::string_view src);
Statement parse_statement(std::string_view src);
/// A statement when the text contains an equivalence sign, else an expression.
std::variant<Statement, Expr> parse(std::string_view src);

}  // namespace qcongr::dsl
