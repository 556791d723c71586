#include "qcongr/dsl/lexer.hpp"

#include <cctype>

namespace qcongr::dsl {

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Integer: return "integer";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Equiv: return "'==='";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;

  auto advance = [&](std::size_t bytes) {
    for (std::size_t b = 0; b < bytes; ++b, ++i) {
      const auto c = static_cast<unsigned char>(src[i]);
      if (c == '\n') {
        ++pos.line;
        pos.column = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++pos.column;
      }
    }
    pos.offset = i;
  };

  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance(1);
      continue;
    }
    const SourcePos start = pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({TokenKind::Integer, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({TokenKind::Identifier, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (src.substr(i, 3) == "===") {
      out.push_back({TokenKind::Equiv, "===", start});
      advance(3);
      continue;
    }
    if (src.substr(i, 3) == "\xE2\x89\xA1") {
      out.push_back({TokenKind::Equiv, "\xE2\x89\xA1", start});
      advance(3);
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case ',': kind = TokenKind::Comma; break;
      default: {
        std::string shown = (static_cast<unsigned char>(c) < 0x80) ? std::string(1, c) : "non-ASCII character";
        if (c == '=') shown = "'=' (use '===' or the equivalence sign)";
        throw DslError(ErrorKind::Lexical, start, "unexpected " + shown);
      }
    }
    out.push_back({kind, std::string(1, c), start});
    advance(1);
  }
  out.push_back({TokenKind::End, "", pos});
  return out;
}

}  // namespace qcongr::dsl
