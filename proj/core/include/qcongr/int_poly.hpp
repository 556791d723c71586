#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace qcongr {

using Integer = mpz_class;

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. Index i of the coefficient vector holds the coefficient of
/// q^i. The zero polynomial is the empty vector; every other value has a
/// nonzero highest coefficient, so equality is structural.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  /// c * q^exponent
  static IntPoly monomial(const Integer& c, std::size_t exponent);
  /// 1 - q^j
  static IntPoly one_minus_q_power(std::size_t j);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  /// True for c * q^m (including constants); false for zero.
  bool is_monomial() const;

  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  /// Number of stored coefficients: degree + 1, or 0 for zero.
  std::size_t size() const { return coeffs_.size(); }

  std::span<const Integer> coeffs() const { return coeffs_; }
  /// Coefficient of q^i; zero past the end.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;
  /// Exponent of the lowest nonzero term. Requires a nonzero polynomial.
  std::size_t low_order() const;

  /// Positive gcd of all coefficients; zero for the zero polynomial.
  Integer content() const;
  /// Divides out the content and makes the leading coefficient positive.
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const Integer& c);

  /// this += c * q^shift * other, in place.
  void add_scaled_shifted(const IntPoly& other, const Integer& c, std::size_t shift);

  /// this * q^m
  IntPoly shifted(std::size_t m) const;
  /// Drops the lowest m coefficients, i.e. divides by q^m. They must be zero.
  IntPoly unshifted(std::size_t m) const;
  IntPoly pow(unsigned long e) const;

  /// Coefficientwise exact division by an integer known to divide every
  /// coefficient.
  IntPoly divexact(const Integer& c) const;

  /// Exact quotient by 1 - q^j; throws std::domain_error when the
  /// remainder is nonzero.
  IntPoly divide_one_minus_q_power(std::size_t j) const;

  Integer eval(const Integer& x) const;
  /// Value at x modulo a word-sized prime.
  unsigned long eval_mod(unsigned long x, unsigned long p) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(IntPoly a, const Integer& c);
IntPoly operator*(const Integer& c, IntPoly a);

/// Multiplication strategies. `multiply` picks Karatsuba when both operands
/// have at least karatsuba_threshold() coefficients.
IntPoly multiply_schoolbook(const IntPoly& a, const IntPoly& b);
IntPoly multiply_karatsuba(const IntPoly& a, const IntPoly& b);
std::size_t karatsuba_threshold();
void set_karatsuba_threshold(std::size_t threshold);

/// Result of m * a = quot * b + rem with m a positive integer multiplier
/// chosen lazily so that every step stays in Z[q].
struct PseudoDivision {
  IntPoly quot;
  IntPoly rem;
  Integer multiplier;
};
PseudoDivision pseudo_divrem(const IntPoly& a, const IntPoly& b);

/// a / b in Z[q] when b divides a exactly with an integral quotient.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

}  // namespace qcongr
