#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include <gmpxx.h>

#include "qcongr/int_poly.hpp"

namespace qcongr {

using Rational = mpq_class;

/// Polynomial with rational coefficients stored as scale * prim, where prim
/// is a primitive integer polynomial with positive leading coefficient.
/// Zero is scale 0 with an empty prim, so every value has exactly one
/// representation.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(const IntPoly& p);  // NOLINT(google-explicit-constructor)
  RatPoly(Rational scale, const IntPoly& p);

  static RatPoly constant(const Rational& c);
  static RatPoly q_power(std::size_t m);

  bool is_zero() const { return prim_.is_zero(); }
  bool is_constant() const { return prim_.is_constant(); }
  bool is_monomial() const { return prim_.is_monomial(); }
  bool is_one() const { return prim_.is_one() && scale_ == 1; }
  std::optional<std::size_t> degree() const { return prim_.degree(); }

  const IntPoly& prim() const { return prim_; }
  const Rational& scale() const { return scale_; }

  Rational coeff(std::size_t i) const;
  Rational leading() const;
  /// Exponent of the lowest nonzero term; requires a nonzero polynomial.
  std::size_t low_order() const { return prim_.low_order(); }

  RatPoly monic() const;
  RatPoly pow(unsigned long e) const;
  RatPoly shifted(std::size_t m) const { return RatPoly::raw(scale_, prim_.shifted(m)); }
  RatPoly unshifted(std::size_t m) const { return RatPoly::raw(scale_, prim_.unshifted(m)); }

  /// Multiplies out scale * prim when the result has integer coefficients.
  std::optional<IntPoly> to_int_poly() const;

  RatPoly operator-() const;
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.scale_ == b.scale_ && a.prim_ == b.prim_;
  }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const Rational& c);

 private:
  // Trusted constructor: prim must already be primitive with positive lead.
  static RatPoly raw(Rational scale, IntPoly prim);

  Rational scale_{0};
  IntPoly prim_;
};

inline RatPoly operator*(const Rational& c, const RatPoly& a) { return a * c; }

RatPoly poly_mul(const RatPoly& a, const RatPoly& b);

struct DivRem {
  RatPoly quot;
  RatPoly rem;
};
/// Euclidean division over Q. Throws std::domain_error when b is zero.
DivRem poly_divrem(const RatPoly& a, const RatPoly& b);

/// Monic gcd over Q. Throws std::domain_error when both inputs are zero.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

Rational poly_eval(const RatPoly& a, const Rational& x);

/// Gcd of two primitive integer polynomials, returned primitive with a
/// positive leading coefficient. The default route tries a heuristic
/// evaluation gcd and falls back to the primitive remainder sequence.
IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b);
IntPoly primitive_gcd_prs(const IntPoly& a, const IntPoly& b);
std::optional<IntPoly> primitive_gcd_heuristic(const IntPoly& a, const IntPoly& b);

}  // namespace qcongr
