#include "qcongr/dsl/eval.hpp"

#include <limits>
#include <optional>

namespace qcongr::dsl {

namespace {

// Constants stay in Rational until they meet q, which keeps exponent and
// bound arithmetic off the polynomial path.
struct Value {
  std::optional<Rational> c;
  RatFunc f;

  static Value constant(Rational r) { return {std::move(r), {}}; }
  static Value function(RatFunc g) {
    if (g.is_constant()) return constant(g.constant_value());
    return {std::nullopt, std::move(g)};
  }
  RatFunc as_func() const { return c ? RatFunc::constant(*c) : f; }
};

class Evaluator {
 public:
  Evaluator(Binding binding, QObjectCache& cache) : binding_(std::move(binding)), cache_(cache) {}

  Value value(const Expr& e) {
    switch (e->kind) {
      case NodeKind::IntLit: return Value::constant(Rational(e->value));
      case NodeKind::Var: {
        auto it = binding_.find(e->name);
        if (it == binding_.end()) throw DslError(ErrorKind::UnboundVariable, e->pos, "unbound variable '" + e->name + "'");
        return Value::constant(Rational(it->second));
      }
      case NodeKind::Q: return Value::function(RatFunc::q_power(1));
      case NodeKind::Neg: {
        Value v = value(e->children[0]);
        if (v.c) return Value::constant(-*v.c);
        return Value::function(-v.f);
      }
      case NodeKind::Add:
      case NodeKind::Sub:
      case NodeKind::Mul:
      case NodeKind::Div: return binary(e);
      case NodeKind::Pow: return power(e);
      case NodeKind::Sum: return sum(e);
      case NodeKind::QBin: {
        const long n = integer(e->children[0], "qbin argument");
        const long k = integer(e->children[1], "qbin argument");
        return Value::function(RatFunc(cache_.q_binomial(n, k)));
      }
      case NodeKind::QInt: {
        const long n = integer(e->children[0], "qint argument");
        if (n < 1) throw DslError(ErrorKind::Domain, e->pos, "qint needs a positive argument");
        return Value::function(RatFunc(q_integer(static_cast<unsigned long>(n))));
      }
      case NodeKind::QPoch: {
        const long n = integer(e->children[0], "qpoch argument");
        if (n < 0) throw DslError(ErrorKind::Domain, e->pos, "qpoch needs a nonnegative argument");
        return Value::function(RatFunc(cache_.pochhammer(static_cast<unsigned long>(n))));
      }
      case NodeKind::Cyc: {
        const long n = integer(e->children[0], "cyc argument");
        if (n < 1) throw DslError(ErrorKind::Domain, e->pos, "cyc needs a positive argument");
        return Value::function(RatFunc(cache_.cyclotomic(static_cast<unsigned long>(n))));
      }
    }
    throw DslError(ErrorKind::Syntax, e->pos, "unknown node");
  }

  long integer(const Expr& e, const char* what) {
    const Value v = value(e);
    if (!v.c || v.c->get_den() != 1) {
      throw DslError(ErrorKind::NotInteger, e->pos, std::string(what) + " must evaluate to an integer");
    }
    const Integer& z = v.c->get_num();
    if (!z.fits_slong_p()) throw DslError(ErrorKind::Domain, e->pos, std::string(what) + " is too large");
    return z.get_si();
  }

 private:
  Value binary(const Expr& e) {
    Value a = value(e->children[0]);
    Value b = value(e->children[1]);
    const bool is_div = e->kind == NodeKind::Div;
    if (is_div && ((b.c && *b.c == 0) || (!b.c && b.f.is_zero()))) {
      throw DslError(ErrorKind::DivisionByZero, e->pos, "division by zero");
    }
    if (a.c && b.c) {
      switch (e->kind) {
        case NodeKind::Add: return Value::constant(*a.c + *b.c);
        case NodeKind::Sub: return Value::constant(*a.c - *b.c);
        case NodeKind::Mul: return Value::constant(*a.c * *b.c);
        default: return Value::constant(*a.c / *b.c);
      }
    }
    const RatFunc x = a.as_func();
    const RatFunc y = b.as_func();
    switch (e->kind) {
      case NodeKind::Add: return Value::function(x + y);
      case NodeKind::Sub: return Value::function(x - y);
      case NodeKind::Mul: return Value::function(x * y);
      default: return Value::function(x / y);
    }
  }

  Value power(const Expr& e) {
    const long exponent = integer(e->children[1], "exponent");
    if (e->children[0]->kind == NodeKind::Q) return Value::function(RatFunc::q_power(exponent));
    Value base = value(e->children[0]);
    if (base.c) {
      if (*base.c == 0 && exponent < 0) throw DslError(ErrorKind::DivisionByZero, e->pos, "zero to a negative power");
      if (exponent < std::numeric_limits<long>::min() / 2 || exponent > std::numeric_limits<long>::max() / 2) {
        throw DslError(ErrorKind::Domain, e->pos, "exponent is too large");
      }
      Rational r;
      const auto mag = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
      mpz_pow_ui(r.get_num_mpz_t(), base.c->get_num_mpz_t(), mag);
      mpz_pow_ui(r.get_den_mpz_t(), base.c->get_den_mpz_t(), mag);
      r.canonicalize();
      return Value::constant(exponent < 0 ? Rational(1) / r : r);
    }
    return Value::function(base.f.pow(exponent));
  }

  Value sum(const Expr& e) {
    const long lo = integer(e->children[0], "sum bound");
    const long hi = integer(e->children[1], "sum bound");
    const Binding outer = binding_;
    Rational constant_part = 0;
    RatFunc total;
    for (long i = lo; i <= hi; ++i) {
      binding_[e->name] = i;
      Value term = value(e->children[2]);
      if (term.c) {
        constant_part += *term.c;
      } else {
        total += term.f;
      }
    }
    binding_ = outer;
    if (total.is_zero()) return Value::constant(constant_part);
    if (constant_part != 0) total += RatFunc::constant(constant_part);
    return Value::function(std::move(total));
  }

  Binding binding_;
  QObjectCache& cache_;
};

}  // namespace

RatFunc eval(const Expr& e, const Binding& binding, QObjectCache& cache) {
  return Evaluator(binding, cache).value(e).as_func();
}

FactoredModulus eval_modulus(const Statement& s, const Binding& binding, QObjectCache& cache) {
  Evaluator ev(binding, cache);
  FactoredModulus m;
  for (const auto& f : s.modulus) {
    const long arg = ev.integer(f.arg, "modulus argument");
    if (arg < 1) throw DslError(ErrorKind::Modulus, f.pos, "modulus argument must be positive");
    if (!f.exponent.fits_uint_p()) throw DslError(ErrorKind::Modulus, f.pos, "modulus exponent is too large");
    const auto k = static_cast<unsigned>(f.exponent.get_ui());
    if (k == 0) continue;
    FactoredModulus part;
    if (f.kind == ModFactor::Kind::Cyc) {
      part.factors[static_cast<unsigned long>(arg)] = k;
    } else {
      for (unsigned long d : divisors(static_cast<unsigned long>(arg))) {
        if (d > 1) part.factors[d] = k;
      }
    }
    m *= part;
  }
  return m;
}

ElaboratedStatement elaborate(const Statement& s, const Binding& binding, QObjectCache& cache) {
  return {eval(s.lhs, binding, cache), eval(s.rhs, binding, cache), eval_modulus(s, binding, cache)};
}

}  // namespace qcongr::dsl
