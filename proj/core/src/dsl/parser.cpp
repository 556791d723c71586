#include "qcongr/dsl/parser.hpp"

#include <algorithm>
#include <map>

#include "qcongr/dsl/lexer.hpp"

namespace qcongr::dsl {

namespace {

const std::map<std::string, std::pair<NodeKind, std::size_t>, std::less<>> kCalls = {
    {"qbin", {NodeKind::QBin, 2}},
    {"qint", {NodeKind::QInt, 1}},
    {"qpoch", {NodeKind::QPoch, 1}},
    {"cyc", {NodeKind::Cyc, 1}},
};

bool is_reserved(std::string_view word) {
  return word == "q" || word == "mod" || word == "sum" || kCalls.count(word) > 0;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  Expr whole_expression() {
    Expr e = expr();
    expect(TokenKind::End, "after expression");
    return e;
  }

  Statement statement() {
    Statement s;
    s.lhs = expr();
    expect(TokenKind::Equiv, "between the two sides");
    s.rhs = expr();
    if (!peek_word("mod")) fail(ErrorKind::Syntax, "expected 'mod' after the right-hand side");
    ++at_;
    s.modulus.push_back(mod_factor());
    while (peek().kind == TokenKind::Star) {
      ++at_;
      s.modulus.push_back(mod_factor());
    }
    if (peek().kind != TokenKind::End) {
      fail(ErrorKind::Modulus, "modulus must be a product of cyc(e)^k and qint(e)^k factors");
    }
    return s;
  }

  bool has_equiv() const {
    return std::any_of(tokens_.begin(), tokens_.end(), [](const Token& t) { return t.kind == TokenKind::Equiv; });
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  bool peek_word(std::string_view w) const {
    return peek().kind == TokenKind::Identifier && peek().text == w;
  }

  [[noreturn]] void fail(ErrorKind kind, const std::string& msg) const { throw DslError(kind, peek().pos, msg); }

  const Token& expect(TokenKind kind, const std::string& where) {
    if (peek().kind != kind) {
      const std::string found = peek().kind == TokenKind::End ? "end of input" : "'" + peek().text + "'";
      fail(ErrorKind::Syntax, "expected " + std::string(describe(kind)) + " " + where + ", found " + found);
    }
    return tokens_[at_++];
  }

  ModFactor mod_factor() {
    ModFactor f;
    f.pos = peek().pos;
    if (peek_word("cyc")) {
      f.kind = ModFactor::Kind::Cyc;
    } else if (peek_word("qint")) {
      f.kind = ModFactor::Kind::QInt;
    } else {
      fail(ErrorKind::Modulus, "modulus must be a product of cyc(e)^k and qint(e)^k factors");
    }
    ++at_;
    expect(TokenKind::LParen, "after modulus function");
    f.arg = expr();
    expect(TokenKind::RParen, "to close modulus argument");
    if (peek().kind == TokenKind::Caret) {
      ++at_;
      if (peek().kind != TokenKind::Integer) fail(ErrorKind::Modulus, "modulus exponent must be an integer literal");
      f.exponent = Integer(tokens_[at_++].text, 10);
    }
    return f;
  }

  Expr expr() {
    Expr left = term();
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const Token& op = tokens_[at_++];
      Expr right = term();
      left = make_node(op.kind == TokenKind::Plus ? NodeKind::Add : NodeKind::Sub, {left, right}, op.pos);
    }
    return left;
  }

  Expr term() {
    Expr left = factor();
    while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
      const Token& op = tokens_[at_++];
      Expr right = factor();
      left = make_node(op.kind == TokenKind::Star ? NodeKind::Mul : NodeKind::Div, {left, right}, op.pos);
    }
    return left;
  }

  Expr factor() {
    if (peek().kind == TokenKind::Minus) {
      const SourcePos pos = tokens_[at_++].pos;
      return make_node(NodeKind::Neg, {power()}, pos);
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (peek().kind == TokenKind::Caret) {
      const SourcePos pos = tokens_[at_++].pos;
      return make_node(NodeKind::Pow, {base, factor()}, pos);
    }
    return base;
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Integer:
        ++at_;
        return make_int(Integer(t.text, 10), t.pos);
      case TokenKind::LParen: {
        ++at_;
        Expr inner = expr();
        expect(TokenKind::RParen, "to close '('");
        return inner;
      }
      case TokenKind::Identifier:
        return identifier();
      default:
        fail(ErrorKind::Syntax, t.kind == TokenKind::End ? "unexpected end of input"
                                                         : "unexpected '" + t.text + "'");
    }
  }

  Expr identifier() {
    const Token& t = tokens_[at_++];
    if (t.text == "q") return make_q(t.pos);
    if (t.text == "mod") throw DslError(ErrorKind::Syntax, t.pos, "'mod' is only allowed after a congruence");
    if (t.text == "sum") {
      expect(TokenKind::LParen, "after 'sum'");
      const Token& var = expect(TokenKind::Identifier, "as the summation variable");
      if (is_reserved(var.text)) throw DslError(ErrorKind::Syntax, var.pos, "'" + var.text + "' is reserved");
      expect(TokenKind::Comma, "after the summation variable");
      Expr lo = expr();
      expect(TokenKind::Comma, "after the lower bound");
      Expr hi = expr();
      expect(TokenKind::Comma, "after the upper bound");
      Expr body = expr();
      expect(TokenKind::RParen, "to close 'sum'");
      return make_sum(var.text, lo, hi, body, t.pos);
    }
    if (auto it = kCalls.find(t.text); it != kCalls.end()) {
      const auto [kind, arity] = it->second;
      expect(TokenKind::LParen, "after '" + t.text + "'");
      std::vector<Expr> args;
      if (peek().kind != TokenKind::RParen) {
        args.push_back(expr());
        while (peek().kind == TokenKind::Comma) {
          ++at_;
          args.push_back(expr());
        }
      }
      if (args.size() != arity) {
        throw DslError(ErrorKind::Arity, t.pos,
                       t.text + " takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s") + ", got " +
                           std::to_string(args.size()));
      }
      expect(TokenKind::RParen, "to close '" + t.text + "'");
      return make_node(kind, std::move(args), t.pos);
    }
    if (peek().kind == TokenKind::LParen) {
      throw DslError(ErrorKind::UnknownFunction, t.pos, "unknown function '" + t.text + "'");
    }
    return make_var(t.text, t.pos);
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view src) { return Parser(src).whole_expression(); }

Statement parse_statement(std::string_view src) { return Parser(src).statement(); }

std::variant<Statement, Expr> parse(std::string_view src) {
  Parser p(src);
  if (p.has_equiv()) return p.statement();
  return p.whole_expression();
}

}  // namespace qcongr::dsl
