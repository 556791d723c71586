#include "qcongr/papersuite.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace qcongr::suite {

namespace {

RatFunc qp(long e) { return RatFunc::q_power(e); }
RatFunc poly(const IntPoly& p) { return RatFunc(p); }
RatFunc rat(const Rational& c) { return RatFunc::constant(c); }
RatFunc rat(long num, long den = 1) {
  Rational c(num, den);
  c.canonicalize();
  return RatFunc::constant(c);
}

long as_long(unsigned long v) {
  if (v > static_cast<unsigned long>(std::numeric_limits<long>::max())) throw std::out_of_range("parameter too large");
  return static_cast<long>(v);
}

void require_positive(unsigned long n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be positive");
}

// 1 - q^n as a rational function.
RatFunc one_minus_qn(unsigned long n) { return poly(IntPoly::one_minus_q_power(n)); }

// A term coeff * q^shift / (1 - q^j)^power.
struct BinomialTerm {
  unsigned long j;
  long shift;
  long coeff;
};

// Sums terms with a common `power` over q^offset * M^power, where M is the
// product of Phi_d for d up to the largest j. Every 1 - q^j with j in range
// divides M, so each numerator is M^power divided `power` times by 1 - q^j.
RatFunc sum_binomial_terms(const std::vector<BinomialTerm>& terms, unsigned power, QObjectCache& cache) {
  if (terms.empty()) return {};
  unsigned long max_j = 0;
  long min_shift = 0;
  for (const auto& t : terms) {
    if (t.j == 0) throw std::invalid_argument("sum_binomial_terms: j must be positive");
    max_j = std::max(max_j, t.j);
    min_shift = std::min(min_shift, t.shift);
  }
  const auto offset = static_cast<std::size_t>(-min_shift);

  CycloProduct base;
  for (unsigned long d = 1; d <= max_j; ++d) base.factors[d] = 1;
  const CycloProduct den_cyclo = base.pow(power);
  const IntPoly base_power = den_cyclo.expand_monic(cache);

  std::map<unsigned long, IntPoly> cofactor;
  IntPoly numerator;
  for (const auto& t : terms) {
    auto it = cofactor.find(t.j);
    if (it == cofactor.end()) {
      IntPoly c = base_power;
      for (unsigned i = 0; i < power; ++i) c = c.divide_one_minus_q_power(t.j);
      it = cofactor.emplace(t.j, std::move(c)).first;
    }
    numerator.add_scaled_shifted(it->second, Integer(t.coeff), static_cast<std::size_t>(t.shift) + offset);
  }

  CycloProduct den = den_cyclo;
  den.q_exponent = offset;
  const IntPoly expanded = base_power.shifted(offset);
  return reduce_over(RatPoly(numerator), den, cache, &expanded);
}

std::vector<BinomialTerm> harmonic_terms(unsigned long n) {
  std::vector<BinomialTerm> terms;
  for (unsigned long j = 1; j < n; ++j) terms.push_back({j, 0, 1});
  return terms;
}

// S(n, r) for r <= 0: each term is q^e / P_k^{2|r|} with P_k = [n+k k][n-1 k];
// all terms go over the least common multiple of the P_k^{2|r|}.
RatFunc lhs_sum_nonpositive(unsigned long n, long r, QObjectCache& cache) {
  const auto power = static_cast<unsigned>(-2 * r);
  const long ln = as_long(n);
  std::vector<CycloProduct> term_den(n);
  std::vector<long> exps(n);
  CycloProduct common;
  long min_exp = 0;
  for (unsigned long k = 0; k < n; ++k) {
    const long lk = as_long(k);
    exps[k] = r * (ln - lk) * (ln - lk) + (r - 1) * lk;
    min_exp = std::min(min_exp, exps[k]);
    CycloProduct f = CycloProduct::q_binomial(n + k, k);
    f *= CycloProduct::q_binomial(n - 1, k);
    term_den[k] = f.pow(power);
    common = CycloProduct::lcm(common, term_den[k]);
  }
  const auto offset = static_cast<std::size_t>(-min_exp);
  IntPoly numerator;
  for (unsigned long k = 0; k < n; ++k) {
    const IntPoly cofactor = common.quotient(term_den[k]).expand_monic(cache);
    numerator.add_scaled_shifted(cofactor, Integer(1), static_cast<std::size_t>(exps[k]) + offset);
  }
  common.q_exponent = offset;
  return reduce_over(RatPoly(numerator), common, cache);
}

}  // namespace

RatFunc lhs_sum(unsigned long n, long r, QObjectCache& cache) {
  require_positive(n, "lhs_sum");
  if (r <= 0) return lhs_sum_nonpositive(n, r, cache);

  const long ln = as_long(n);
  const std::vector<IntPoly> upper = q_binomial_diagonal(n, n);
  const auto power = static_cast<unsigned long>(2 * r);
  IntPoly total;
  for (unsigned long k = 0; k < n; ++k) {
    const long lk = as_long(k);
    const long e = r * (ln - lk) * (ln - lk) + (r - 1) * lk;
    const IntPoly pair = upper[k] * cache.q_binomial(ln - 1, lk);
    total.add_scaled_shifted(pair.pow(power), Integer(1), static_cast<std::size_t>(e));
  }
  return RatFunc(total);
}

RatFunc rhs_theorem(unsigned long n, long r) {
  require_positive(n, "rhs_theorem");
  const long ln = as_long(n);
  const IntPoly qint = q_integer(n);
  const RatFunc lead = qp((r - 1) * ln + 1) * poly(qint);
  Rational c(Integer(r) * (2 * r - 1) * (ln - 1) * (ln - 1), Integer(4));
  c.canonicalize();
  if (c == 0) return lead;
  const IntPoly correction = IntPoly{0, 1} * IntPoly{1, -1}.pow(2) * qint.pow(3);
  return lead - rat(c) * poly(correction);
}

RatFunc rhs_simple(unsigned long n) {
  require_positive(n, "rhs_simple");
  return poly(q_integer(n).shifted(1));
}

RatFunc rhs_prime_power(unsigned long n) {
  require_positive(n, "rhs_prime_power");
  return poly(q_integer(n).shifted((n - 1) * (n - 1)));
}

RatFunc harmonic1(unsigned long n, QObjectCache& cache) {
  require_positive(n, "harmonic1");
  return sum_binomial_terms(harmonic_terms(n), 1, cache);
}

RatFunc harmonic1_rhs(unsigned long n) {
  require_positive(n, "harmonic1_rhs");
  const long ln = as_long(n);
  return rat(ln - 1, 2) + rat(ln * ln - 1, 24) * one_minus_qn(n);
}

RatFunc harmonic2(unsigned long n, QObjectCache& cache) {
  require_positive(n, "harmonic2");
  return sum_binomial_terms(harmonic_terms(n), 2, cache);
}

RatFunc harmonic2_rhs(unsigned long n) {
  require_positive(n, "harmonic2_rhs");
  const long ln = as_long(n);
  return rat(-(ln - 1) * (ln - 5), 12);
}

RatFunc weighted_harmonic(unsigned long k, QObjectCache& cache) {
  std::vector<BinomialTerm> terms;
  for (unsigned long j = 1; j <= k; ++j) terms.push_back({j, as_long(j), 1});
  return sum_binomial_terms(terms, 2, cache);
}

RatFunc double_sum(unsigned long n, QObjectCache& cache) {
  require_positive(n, "double_sum");
  std::vector<BinomialTerm> terms;
  for (unsigned long k = 0; k < n; ++k) {
    for (unsigned long j = 1; j <= k; ++j) terms.push_back({j, as_long(j) - as_long(k), 1});
  }
  return sum_binomial_terms(terms, 2, cache);
}

namespace {

// 1 / (q^{n-1} (q - 1))
RatFunc double_sum_prefactor(unsigned long n) {
  return RatFunc::from_coprime(RatPoly::constant(1), RatPoly(IntPoly{-1, 1}.shifted(n - 1)));
}

}  // namespace

RatFunc double_sum_closed_form(unsigned long n, QObjectCache& cache) {
  require_positive(n, "double_sum_closed_form");
  return double_sum_prefactor(n) * (harmonic1(n, cache) - one_minus_qn(n) * harmonic2(n, cache));
}

RatFunc double_sum_swapped(unsigned long n, QObjectCache& cache) {
  require_positive(n, "double_sum_swapped");
  std::vector<BinomialTerm> terms;
  for (unsigned long j = 1; j < n; ++j) {
    terms.push_back({j, as_long(n), 1});
    terms.push_back({j, as_long(j), -1});
  }
  return double_sum_prefactor(n) * sum_binomial_terms(terms, 2, cache);
}

IntPoly product_pair(unsigned long n, unsigned long k, QObjectCache& cache) {
  require_positive(n, "product_pair");
  if (k >= n) throw std::invalid_argument("product_pair: k must satisfy 0 <= k <= n-1");
  return cache.q_binomial(as_long(n + k), as_long(k)) * cache.q_binomial(as_long(n - 1), as_long(k));
}

RatFunc product_pair_approx(unsigned long n, unsigned long k, QObjectCache& cache) {
  require_positive(n, "product_pair_approx");
  if (k >= n) throw std::invalid_argument("product_pair_approx: k must satisfy 0 <= k <= n-1");
  const long ln = as_long(n);
  const long lk = as_long(k);
  const RatFunc inner = one_minus_qn(n).pow(2) * qp(-ln) * weighted_harmonic(k, cache);
  const RatFunc sign = rat(k % 2 == 0 ? 1 : -1);
  return sign * qp(ln * lk - lk * (lk + 1) / 2) * (rat(1) - inner);
}

RatFunc product_pair_factored(unsigned long n, unsigned long k, QObjectCache& cache) {
  require_positive(n, "product_pair_factored");
  if (k >= n) throw std::invalid_argument("product_pair_factored: k must satisfy 0 <= k <= n-1");
  const IntPoly one_minus_qn_sq = IntPoly::one_minus_q_power(n).pow(2);
  IntPoly numerator = IntPoly::constant(1);
  for (unsigned long j = 1; j <= k; ++j) {
    IntPoly factor = one_minus_qn_sq;
    factor -= IntPoly::one_minus_q_power(j).pow(2).shifted(n - j);
    numerator = numerator * factor;
  }
  return reduce_over(RatPoly(numerator), CycloProduct::pochhammer(k).pow(2), cache);
}

std::pair<RatFunc, RatFunc> binom_step(unsigned long n, unsigned long k, long r, QObjectCache& cache) {
  require_positive(n, "binom_step");
  if (k >= n) throw std::invalid_argument("binom_step: k must satisfy 0 <= k <= n-1");
  const long ln = as_long(n);
  const long lk = as_long(k);
  RatFunc lhs = poly(product_pair(n, k, cache)).pow(2 * r);
  if (r == 0) return {lhs, rat(1)};
  const RatFunc inner = rat(2 * r) * one_minus_qn(n).pow(2) * qp(-ln) * weighted_harmonic(k, cache);
  RatFunc rhs = qp(2 * r * ln * lk - r * lk * (lk + 1)) * (rat(1) - inner);
  return {std::move(lhs), std::move(rhs)};
}

bool identity_b2(unsigned long n, long r) {
  require_positive(n, "identity_b2");
  const long ln = as_long(n);
  RatFunc geometric;
  for (long k = 0; k < ln; ++k) geometric += qp(-k);
  const RatFunc left = qp(ln * ln * r) * geometric;
  const RatFunc right = qp(ln * (ln * r - 1) + 1) * poly(q_integer(n));
  return left == right;
}

bool identity_b3(unsigned long n, QObjectCache& cache) {
  require_positive(n, "identity_b3");
  const RatFunc lhs = double_sum(n, cache);
  return lhs == double_sum_swapped(n, cache) && lhs == double_sum_closed_form(n, cache);
}

RatFunc q_power_truncation(unsigned long s, unsigned long n, unsigned order) {
  require_positive(n, "q_power_truncation");
  const long ls = as_long(s);
  if (order == 2) return rat(1) - rat(ls) * one_minus_qn(n);
  if (order == 3) {
    const RatFunc one_minus_q = poly(IntPoly{1, -1});
    const RatFunc qint = poly(q_integer(n));
    return rat(1) - rat(ls) * one_minus_q * qint + rat(ls * (ls - 1), 2) * one_minus_q.pow(2) * qint.pow(2);
  }
  throw std::invalid_argument("q_power_truncation: order must be 2 or 3");
}

RatFunc chain_rhs(ChainStep step, unsigned long n, long r, QObjectCache& cache) {
  require_positive(n, "chain_rhs");
  const long ln = as_long(n);
  const RatFunc one_minus_q = poly(IntPoly{1, -1});
  const RatFunc qint = poly(q_integer(n));
  switch (step) {
    case ChainStep::B1: {
      RatFunc geometric;
      for (long k = 0; k < ln; ++k) geometric += qp(-k);
      return qp(ln * ln * r) * geometric -
             rat(2 * r) * qp(ln * (ln * r - 1)) * one_minus_qn(n).pow(2) * double_sum(n, cache);
    }
    case ChainStep::B6:
      return double_sum_prefactor(n) * (rat(ln - 1, 2) + rat((ln - 1) * (ln - 3), 8) * one_minus_qn(n));
    case ChainStep::NEW3: {
      const RatFunc bracket = rat(ln - 1, 2) + rat((ln - 1) * (ln - 3), 8) * one_minus_q * qint;
      return qp(ln * (ln * r - 1) + 1) * qint +
             rat(2 * r) * qp(ln * (ln * r - 2) + 1) * one_minus_q * qint.pow(2) * bracket;
    }
    case ChainStep::B9: {
      const long c = 2 * ln * ln * r * r - ln * ln * r - 4 * ln * r * r + 2 * ln * r + 5 * r - 4;
      const RatFunc q = qp(1);
      return q * qint - q * one_minus_q * rat(r - 1) * qint.pow(2) -
             q * one_minus_q.pow(2) * rat(c, 4) * qint.pow(3);
    }
  }
  throw std::invalid_argument("chain_rhs: unknown step");
}

Verdict b10_equiv_b9(unsigned long n, long r, QObjectCache& cache) {
  require_positive(n, "b10_equiv_b9");
  const FactoredModulus mod = build_modulus({ModulusKind::PhiPow, 4}, n);
  const RatFunc theorem = rhs_theorem(n, r);
  Verdict first = congruent(theorem, chain_rhs(ChainStep::B9, n, r, cache), mod, cache);
  if (!first.is_holds()) {
    first.detail = "closed form vs expanded form: " + first.detail;
    return first;
  }
  Verdict second = congruent(lhs_sum(n, r, cache), theorem, mod, cache);
  second.detail = (second.is_holds() ? "both halves hold; " : "sum vs closed form: ") + second.detail;
  return second;
}

Integer apery_sum(unsigned long n, unsigned long r) {
  require_positive(n, "apery_sum");
  Integer total = 0;
  Integer a, b;
  for (unsigned long k = 0; k < n; ++k) {
    mpz_bin_uiui(a.get_mpz_t(), n + k, k);
    mpz_bin_uiui(b.get_mpz_t(), n - 1, k);
    Integer term = a * b;
    mpz_pow_ui(term.get_mpz_t(), term.get_mpz_t(), 2 * r);
    total += term;
  }
  return total;
}

AperyResult apery_sum_mod_n(unsigned long n) {
  AperyResult out;
  out.sum = apery_sum(n, 1);
  mpz_fdiv_r_ui(out.residue.get_mpz_t(), out.sum.get_mpz_t(), n);
  out.divisible = (out.residue == 0);
  return out;
}

}  // namespace qcongr::suite
