#pragma once

// Deliberately naive reference implementations. Nothing here depends on
// the library; polynomials are plain vectors of mpq_class in ascending
// powers, trimmed so the zero polynomial is the empty vector.

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;
using Poly = std::vector<Q>;

Poly trim(Poly p);
Poly from_ints(const std::vector<long>& c);
Poly monomial(std::size_t e, const Q& c = 1);
Poly one_minus_q_power(std::size_t j);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Q& c);
Poly pow(const Poly& a, unsigned e);

/// Long division over Q; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Euclid over Q, monic; gcd(0, 0) is empty.
Poly gcd(const Poly& a, const Poly& b);
Q eval(const Poly& a, const Q& x);
long degree(const Poly& a);  // -1 for zero

/// Number of times b divides a exactly (a nonzero).
int valuation(const Poly& a, const Poly& b);

int mobius(unsigned long n);
/// prod_{d | n} (q^d - 1)^mu(n/d), multiplying and dividing naively.
Poly cyclotomic_mobius(unsigned long n);
/// (q;q)_n / ((q;q)_k (q;q)_{n-k}) by long division.
Poly q_binomial_factorial(long n, long k);
Poly q_integer(unsigned long n);

Z binomial(unsigned long n, unsigned long k);

/// Fraction of polynomials, reduced with the naive gcd and a monic
/// denominator.
struct Frac {
  Poly num;
  Poly den{Q(1)};
};
Frac reduce(Frac f);
Frac add(const Frac& a, const Frac& b);
Frac sub(const Frac& a, const Frac& b);
Frac mul(const Frac& a, const Frac& b);
Frac q_power(long e);

/// The main q-binomial sum, one term at a time, over the product of the
/// term denominators.
Frac lhs_sum_unreduced(unsigned long n, long r);
Frac lhs_sum(unsigned long n, long r);

}  // namespace oracle
