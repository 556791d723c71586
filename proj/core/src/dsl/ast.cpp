#include "qcongr/dsl/ast.hpp"

#include <utility>

namespace qcongr::dsl {

namespace {

std::string prefixed(const SourcePos& pos, const std::string& message) {
  return "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + message;
}

// Grammar levels: expr < term < factor < atom.
enum Level { kExpr = 1, kTerm = 2, kFactor = 3, kAtom = 4 };

int level_of(NodeKind k) {
  switch (k) {
    case NodeKind::Add:
    case NodeKind::Sub: return kExpr;
    case NodeKind::Mul:
    case NodeKind::Div: return kTerm;
    case NodeKind::Neg:
    case NodeKind::Pow: return kFactor;
    default: return kAtom;
  }
}

void emit(const Expr& e, std::string& out);

void emit_at(const Expr& e, int required, std::string& out) {
  if (level_of(e->kind) < required) {
    out += '(';
    emit(e, out);
    out += ')';
  } else {
    emit(e, out);
  }
}

void emit_call(const char* name, const Expr& e, std::string& out) {
  out += name;
  out += '(';
  for (std::size_t i = 0; i < e->children.size(); ++i) {
    if (i) out += ", ";
    emit(e->children[i], out);
  }
  out += ')';
}

void emit(const Expr& e, std::string& out) {
  switch (e->kind) {
    case NodeKind::IntLit: out += e->value.get_str(); return;
    case NodeKind::Var: out += e->name; return;
    case NodeKind::Q: out += 'q'; return;
    case NodeKind::Add:
    case NodeKind::Sub:
      emit_at(e->children[0], kExpr, out);
      out += e->kind == NodeKind::Add ? " + " : " - ";
      emit_at(e->children[1], kTerm, out);
      return;
    case NodeKind::Mul:
    case NodeKind::Div:
      emit_at(e->children[0], kTerm, out);
      out += e->kind == NodeKind::Mul ? " * " : " / ";
      emit_at(e->children[1], kFactor, out);
      return;
    case NodeKind::Neg: {
      // "-" applies to an atom or to atom^factor.
      const Expr& c = e->children[0];
      out += '-';
      if (c->kind == NodeKind::Pow || level_of(c->kind) == kAtom) {
        emit(c, out);
      } else {
        out += '(';
        emit(c, out);
        out += ')';
      }
      return;
    }
    case NodeKind::Pow:
      emit_at(e->children[0], kAtom, out);
      out += '^';
      emit_at(e->children[1], kFactor, out);
      return;
    case NodeKind::Sum:
      out += "sum(" + e->name + ", ";
      emit(e->children[0], out);
      out += ", ";
      emit(e->children[1], out);
      out += ", ";
      emit(e->children[2], out);
      out += ')';
      return;
    case NodeKind::QBin: emit_call("qbin", e, out); return;
    case NodeKind::QInt: emit_call("qint", e, out); return;
    case NodeKind::QPoch: emit_call("qpoch", e, out); return;
    case NodeKind::Cyc: emit_call("cyc", e, out); return;
  }
}

void collect_free(const Expr& e, std::set<std::string>& bound, std::set<std::string>& out) {
  if (e->kind == NodeKind::Var) {
    if (!bound.count(e->name)) out.insert(e->name);
    return;
  }
  if (e->kind == NodeKind::Sum) {
    collect_free(e->children[0], bound, out);
    collect_free(e->children[1], bound, out);
    const bool was_bound = bound.count(e->name) > 0;
    bound.insert(e->name);
    collect_free(e->children[2], bound, out);
    if (!was_bound) bound.erase(e->name);
    return;
  }
  for (const auto& c : e->children) collect_free(c, bound, out);
}

}  // namespace

DslError::DslError(ErrorKind kind, SourcePos pos, const std::string& message)
    : std::runtime_error(prefixed(pos, message)), kind_(kind), pos_(pos), message_(message) {}

Expr make_int(Integer value, SourcePos pos) {
  return std::make_shared<const Node>(Node{NodeKind::IntLit, std::move(value), {}, {}, pos});
}

Expr make_var(std::string name, SourcePos pos) {
  return std::make_shared<const Node>(Node{NodeKind::Var, 0, std::move(name), {}, pos});
}

Expr make_q(SourcePos pos) { return std::make_shared<const Node>(Node{NodeKind::Q, 0, {}, {}, pos}); }

Expr make_node(NodeKind kind, std::vector<Expr> children, SourcePos pos) {
  return std::make_shared<const Node>(Node{kind, 0, {}, std::move(children), pos});
}

Expr make_sum(std::string var, Expr lo, Expr hi, Expr body, SourcePos pos) {
  return std::make_shared<const Node>(
      Node{NodeKind::Sum, 0, std::move(var), {std::move(lo), std::move(hi), std::move(body)}, pos});
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->value != b->value || a->name != b->name) return false;
  if (a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i) {
    if (!structurally_equal(a->children[i], b->children[i])) return false;
  }
  return true;
}

std::set<std::string> free_variables(const Expr& e) {
  std::set<std::string> bound, out;
  collect_free(e, bound, out);
  return out;
}

std::string format(const Expr& e) {
  std::string out;
  emit(e, out);
  return out;
}

bool structurally_equal(const Statement& a, const Statement& b) {
  if (!structurally_equal(a.lhs, b.lhs) || !structurally_equal(a.rhs, b.rhs)) return false;
  if (a.modulus.size() != b.modulus.size()) return false;
  for (std::size_t i = 0; i < a.modulus.size(); ++i) {
    const auto& x = a.modulus[i];
    const auto& y = b.modulus[i];
    if (x.kind != y.kind || x.exponent != y.exponent || !structurally_equal(x.arg, y.arg)) return false;
  }
  return true;
}

std::set<std::string> free_variables(const Statement& s) {
  std::set<std::string> out = free_variables(s.lhs);
  out.merge(free_variables(s.rhs));
  for (const auto& f : s.modulus) out.merge(free_variables(f.arg));
  return out;
}

std::string format(const Statement& s) {
  std::string out = format(s.lhs) + " === " + format(s.rhs) + " mod ";
  for (std::size_t i = 0; i < s.modulus.size(); ++i) {
    const auto& f = s.modulus[i];
    if (i) out += " * ";
    out += f.kind == ModFactor::Kind::Cyc ? "cyc(" : "qint(";
    out += format(f.arg) + ")";
    if (f.exponent != 1) out += "^" + f.exponent.get_str();
  }
  return out;
}

}  // namespace qcongr::dsl
