#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcongr/dsl/ast.hpp"

namespace qcongr::dsl {

enum class TokenKind { Integer, Identifier, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Equiv, End };

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
};

/// Splits UTF-8 text into tokens ending with End. Accepts "≡" and "===".
/// Throws DslError(Lexical) on anything else outside the grammar.
std::vector<Token> tokenize(std::string_view src);

std::string_view describe(TokenKind kind);

}  // namespace qcongr::dsl
