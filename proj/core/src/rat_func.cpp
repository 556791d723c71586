#include "qcongr/rat_func.hpp"

#include <stdexcept>

namespace qcongr {

namespace {

// a / g for g a known divisor of a.
RatPoly exact_quotient(const RatPoly& a, const RatPoly& g) {
  if (g.is_constant()) return a * (Rational(1) / g.leading());
  auto q = divide_exact(a.prim(), g.prim());
  if (!q) throw std::logic_error("exact_quotient: divisor does not divide");
  return RatPoly(a.scale() / g.scale(), *q);
}

}  // namespace

RatFunc::RatFunc(const RatPoly& p) : num_(p), den_(RatPoly::constant(1)) {}

RatFunc::RatFunc(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = RatPoly::constant(1);
    return;
  }
  RatPoly g = poly_gcd(num, den);
  if (g.is_constant()) {
    *this = from_coprime(num, den);
  } else {
    *this = from_coprime(exact_quotient(num, g), exact_quotient(den, g));
  }
}

RatFunc RatFunc::from_coprime(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  RatFunc r;
  if (num.is_zero()) return r;
  Rational inv_lead = Rational(1) / den.leading();
  r.num_ = num * inv_lead;
  r.den_ = den * inv_lead;
  return r;
}

RatFunc RatFunc::constant(const Rational& c) { return RatFunc(RatPoly::constant(c)); }

RatFunc RatFunc::q_power(long e) {
  if (e >= 0) return RatFunc(RatPoly::q_power(static_cast<std::size_t>(e)));
  return from_coprime(RatPoly::constant(1), RatPoly::q_power(static_cast<std::size_t>(-e)));
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw std::domain_error("rational function is not constant");
  if (is_zero()) return 0;
  return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by the zero rational function");
  return from_coprime(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  const auto ue = static_cast<unsigned long>(e);
  RatFunc r;
  r.num_ = num_.pow(ue);
  r.den_ = den_.pow(ue);
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one()) return RatFunc::from_coprime(a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_one()) return RatFunc::from_coprime(a.num_ + b.num_ * a.den_, a.den_);
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);

  RatPoly g = poly_gcd(a.den_, b.den_);
  if (g.is_constant()) {
    return RatFunc::from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  RatPoly da = exact_quotient(a.den_, g);
  RatPoly db = exact_quotient(b.den_, g);
  RatPoly t = a.num_ * db + b.num_ * da;
  if (t.is_zero()) return {};
  RatPoly h = poly_gcd(t, g);
  if (h.is_constant()) return RatFunc::from_coprime(t, da * b.den_);
  return RatFunc::from_coprime(exact_quotient(t, h), da * exact_quotient(b.den_, h));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_one()) {
    RatPoly g1 = poly_gcd(an, bd);
    if (!g1.is_constant()) {
      an = exact_quotient(an, g1);
      bd = exact_quotient(bd, g1);
    }
  }
  if (!ad.is_one()) {
    RatPoly g2 = poly_gcd(bn, ad);
    if (!g2.is_constant()) {
      bn = exact_quotient(bn, g2);
      ad = exact_quotient(ad, g2);
    }
  }
  return RatFunc::from_coprime(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

}  // namespace qcongr
