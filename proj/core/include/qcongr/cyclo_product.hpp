#pragma once

#include <cstddef>
#include <map>

#include "qcongr/qspecial.hpp"
#include "qcongr/rat_func.hpp"

namespace qcongr {

/// unit * q^q_exponent * prod_d Phi_d^e_d: a polynomial whose irreducible
/// factorization over Q is known up front. Denominators of every q-series
/// object built here have this shape, which lets fractions be reduced by
/// trial division instead of a general gcd.
struct CycloProduct {
  Rational unit{1};
  std::size_t q_exponent = 0;
  std::map<unsigned long, unsigned> factors;

  /// (q;q)_m = (-1)^m prod_d Phi_d^floor(m/d)
  static CycloProduct pochhammer(unsigned long m);
  /// 1 - q^j = -prod_{d | j} Phi_d
  static CycloProduct one_minus_q_power(unsigned long j);
  /// [n k] = prod_d Phi_d^(floor(n/d) - floor(k/d) - floor((n-k)/d))
  static CycloProduct q_binomial(unsigned long n, unsigned long k);

  CycloProduct& operator*=(const CycloProduct& other);
  CycloProduct pow(unsigned e) const;
  /// this / other; other must divide this factor by factor.
  CycloProduct quotient(const CycloProduct& other) const;
  /// Factorwise maximum (least common multiple), unit 1.
  static CycloProduct lcm(const CycloProduct& a, const CycloProduct& b);

  /// q^q_exponent * prod Phi_d^e_d, without the unit. Multiplies factors in
  /// a size-balanced order so large products use fast multiplication.
  IntPoly expand_monic(QObjectCache& cache = QObjectCache::shared()) const;
  IntPoly expand(QObjectCache& cache = QObjectCache::shared()) const;
};

/// num / den in lowest terms. Cancels Phi_d and q factors of den from num
/// by trial division; what remains is coprime because every factor of den
/// is irreducible. `expanded_den`, when given, must equal den.expand() and
/// is reused if nothing cancels.
RatFunc reduce_over(const RatPoly& num, const CycloProduct& den,
                    QObjectCache& cache = QObjectCache::shared(),
                    const IntPoly* expanded_den = nullptr);

}  // namespace qcongr
