#pragma once

#include <utility>
#include <vector>

#include "qcongr/congruence.hpp"
#include "qcongr/cyclo_product.hpp"
#include "qcongr/qspecial.hpp"
#include "qcongr/rat_func.hpp"

/// Builders for the q-binomial sum
///
///   S(n, r) = sum_{k=0}^{n-1} q^{r(n-k)^2+(r-1)k} [n+k k]^{2r} [n-1 k]^{2r},
///
/// its closed-form companion modulo [n] Phi_n^3, and every intermediate
/// expression used to reduce one to the other. Each builder returns an exact
/// value; pairing values with moduli happens in catalog.hpp.
namespace qcongr::suite {

/// sum_{k=0}^{n-1} q^{r(n-k)^2+(r-1)k} [n+k k]^{2r} [n-1 k]^{2r}. A
/// polynomial for r >= 1; for r <= 0 the binomial powers and negative q
/// powers move into the denominator.
RatFunc lhs_sum(unsigned long n, long r, QObjectCache& cache = QObjectCache::shared());

/// q^{(r-1)n+1}[n] - r(2r-1)(n-1)^2 q (1-q)^2 [n]^3 / 4
RatFunc rhs_theorem(unsigned long n, long r);
/// q [n]
RatFunc rhs_simple(unsigned long n);
/// q^{(n-1)^2} [n]
RatFunc rhs_prime_power(unsigned long n);

/// sum_{j=1}^{n-1} 1/(1-q^j) and (n-1)/2 + (n^2-1)(1-q^n)/24.
RatFunc harmonic1(unsigned long n, QObjectCache& cache = QObjectCache::shared());
RatFunc harmonic1_rhs(unsigned long n);
/// sum_{j=1}^{n-1} 1/(1-q^j)^2 and -(n-1)(n-5)/12.
RatFunc harmonic2(unsigned long n, QObjectCache& cache = QObjectCache::shared());
RatFunc harmonic2_rhs(unsigned long n);

/// sum_{j=1}^{k} q^j/(1-q^j)^2
RatFunc weighted_harmonic(unsigned long k, QObjectCache& cache = QObjectCache::shared());
/// sum_{k=0}^{n-1} q^{-k} sum_{j=1}^{k} q^j/(1-q^j)^2, built term by term.
RatFunc double_sum(unsigned long n, QObjectCache& cache = QObjectCache::shared());

/// [n+k k][n-1 k] for 0 <= k <= n-1.
IntPoly product_pair(unsigned long n, unsigned long k, QObjectCache& cache = QObjectCache::shared());
/// (-1)^k q^{nk-k(k+1)/2} (1 - (1-q^n)^2 q^{-n} sum_{j=1}^k q^j/(1-q^j)^2)
RatFunc product_pair_approx(unsigned long n, unsigned long k, QObjectCache& cache = QObjectCache::shared());
/// (1/(q;q)_k^2) prod_{j=1}^k ((1-q^n)^2 - (1-q^j)^2 q^{n-j}); equals
/// product_pair exactly.
RatFunc product_pair_factored(unsigned long n, unsigned long k, QObjectCache& cache = QObjectCache::shared());

/// ([n+k k][n-1 k])^{2r} paired with
/// q^{2rnk-rk(k+1)} (1 - 2r(1-q^n)^2 q^{-n} sum_{j=1}^k q^j/(1-q^j)^2).
std::pair<RatFunc, RatFunc> binom_step(unsigned long n, unsigned long k, long r,
                                       QObjectCache& cache = QObjectCache::shared());

/// q^{n^2 r} sum_{k=0}^{n-1} q^{-k} == q^{n(nr-1)+1} [n] exactly.
bool identity_b2(unsigned long n, long r);
/// The reordering of double_sum into harmonic sums holds exactly in both of
/// its displayed forms.
bool identity_b3(unsigned long n, QObjectCache& cache = QObjectCache::shared());
/// (1/(q^{n-1}(q-1))) (sum 1/(1-q^j) - (1-q^n) sum 1/(1-q^j)^2)
RatFunc double_sum_closed_form(unsigned long n, QObjectCache& cache = QObjectCache::shared());
/// (1/(q^{n-1}(q-1))) sum_{j=1}^{n-1} (q^n - q^j)/(1-q^j)^2
RatFunc double_sum_swapped(unsigned long n, QObjectCache& cache = QObjectCache::shared());

/// Truncation of q^{sn} = (1 - (1-q^n))^s: order 2 gives 1 - s(1-q^n), order 3
/// gives 1 - s(1-q)[n] + s(s-1)(1-q)^2[n]^2/2.
RatFunc q_power_truncation(unsigned long s, unsigned long n, unsigned order);

enum class ChainStep { B1, B6, NEW3, B9 };
/// Right-hand side of the named step of the proof chain.
RatFunc chain_rhs(ChainStep step, unsigned long n, long r, QObjectCache& cache = QObjectCache::shared());

/// rhs_theorem = chain_rhs(B9) and lhs_sum = rhs_theorem, both mod Phi_n^4;
/// the first failing half decides the verdict.
Verdict b10_equiv_b9(unsigned long n, long r, QObjectCache& cache = QObjectCache::shared());

struct AperyResult {
  Integer sum;
  Integer residue;
  bool divisible;
};
/// sum_{k=0}^{n-1} C(n+k,k)^2 C(n-1,k)^2 and its residue mod n.
AperyResult apery_sum_mod_n(unsigned long n);
/// sum_{k=0}^{n-1} C(n+k,k)^{2r} C(n-1,k)^{2r} for r >= 0.
Integer apery_sum(unsigned long n, unsigned long r);

}  // namespace qcongr::suite
