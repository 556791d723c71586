#pragma once

#include "qcongr/rat_poly.hpp"

namespace qcongr {

/// Rational function num/den in lowest terms with a monic denominator.
/// Zero is 0/1. Because the normal form is unique, == is structural.
class RatFunc {
 public:
  RatFunc() : den_(RatPoly::constant(1)) {}
  RatFunc(const RatPoly& p);  // NOLINT(google-explicit-constructor)
  RatFunc(const IntPoly& p) : RatFunc(RatPoly(p)) {}  // NOLINT(google-explicit-constructor)
  /// Reduces to lowest terms. Throws std::domain_error on a zero denominator.
  RatFunc(const RatPoly& num, const RatPoly& den);

  /// For callers that have already established gcd(num, den) = 1; only the
  /// monic normalization of the denominator is applied.
  static RatFunc from_coprime(const RatPoly& num, const RatPoly& den);
  static RatFunc constant(const Rational& c);
  /// q^e for any integer e; negative powers live in the denominator.
  static RatFunc q_power(long e);

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// The value as a rational constant, when is_constant().
  Rational constant_value() const;

  RatFunc inverse() const;
  RatFunc pow(long e) const;
  /// Renormalizes from scratch; the identity on every valid value.
  RatFunc normalized() const { return RatFunc(num_, den_); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws std::domain_error when b is zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RatPoly num_;
  RatPoly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op);

}  // namespace qcongr
