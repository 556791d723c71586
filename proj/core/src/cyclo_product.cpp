#include "qcongr/cyclo_product.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace qcongr {

namespace {

IntPoly balanced_product(std::vector<IntPoly> polys) {
  if (polys.empty()) return IntPoly::constant(1);
  auto larger = [](const IntPoly& a, const IntPoly& b) { return a.size() > b.size(); };
  std::priority_queue<IntPoly, std::vector<IntPoly>, decltype(larger)> heap(larger, std::move(polys));
  while (heap.size() > 1) {
    IntPoly a = heap.top();
    heap.pop();
    IntPoly b = heap.top();
    heap.pop();
    heap.push(a * b);
  }
  return heap.top();
}

}  // namespace

CycloProduct CycloProduct::pochhammer(unsigned long m) {
  CycloProduct c;
  c.unit = (m % 2 == 0) ? 1 : -1;
  for (unsigned long d = 1; d <= m; ++d) c.factors[d] = static_cast<unsigned>(m / d);
  return c;
}

CycloProduct CycloProduct::one_minus_q_power(unsigned long j) {
  if (j == 0) throw std::invalid_argument("1 - q^0 is zero");
  CycloProduct c;
  c.unit = -1;
  for (unsigned long d : divisors(j)) c.factors[d] = 1;
  return c;
}

CycloProduct CycloProduct::q_binomial(unsigned long n, unsigned long k) {
  CycloProduct c;
  c.factors = q_binomial_factorization(n, k);
  return c;
}

CycloProduct& CycloProduct::operator*=(const CycloProduct& other) {
  unit *= other.unit;
  q_exponent += other.q_exponent;
  for (const auto& [d, e] : other.factors) factors[d] += e;
  return *this;
}

CycloProduct CycloProduct::pow(unsigned e) const {
  CycloProduct c;
  mpz_pow_ui(c.unit.get_num_mpz_t(), unit.get_num_mpz_t(), e);
  mpz_pow_ui(c.unit.get_den_mpz_t(), unit.get_den_mpz_t(), e);
  c.unit.canonicalize();
  c.q_exponent = q_exponent * e;
  if (e > 0) {
    for (const auto& [d, x] : factors) c.factors[d] = x * e;
  }
  return c;
}

CycloProduct CycloProduct::quotient(const CycloProduct& other) const {
  CycloProduct c = *this;
  c.unit /= other.unit;
  if (other.q_exponent > c.q_exponent) throw std::domain_error("CycloProduct::quotient: q power does not divide");
  c.q_exponent -= other.q_exponent;
  for (const auto& [d, e] : other.factors) {
    auto it = c.factors.find(d);
    if (it == c.factors.end() || it->second < e) throw std::domain_error("CycloProduct::quotient: factor does not divide");
    it->second -= e;
    if (it->second == 0) c.factors.erase(it);
  }
  return c;
}

CycloProduct CycloProduct::lcm(const CycloProduct& a, const CycloProduct& b) {
  CycloProduct c;
  c.q_exponent = std::max(a.q_exponent, b.q_exponent);
  c.factors = a.factors;
  for (const auto& [d, e] : b.factors) c.factors[d] = std::max(c.factors[d], e);
  return c;
}

IntPoly CycloProduct::expand_monic(QObjectCache& cache) const {
  // Group by exponent level: prod_d Phi_d^e_d = prod_t prod_{e_d >= t} Phi_d.
  unsigned max_e = 0;
  for (const auto& [d, e] : factors) max_e = std::max(max_e, e);
  std::vector<IntPoly> levels;
  IntPoly previous;
  std::vector<unsigned long> previous_set;
  for (unsigned t = 1; t <= max_e; ++t) {
    std::vector<unsigned long> set;
    for (const auto& [d, e] : factors) {
      if (e >= t) set.push_back(d);
    }
    if (set != previous_set) {
      std::vector<IntPoly> polys;
      polys.reserve(set.size());
      for (unsigned long d : set) polys.push_back(cache.cyclotomic(d));
      previous = balanced_product(std::move(polys));
      previous_set = std::move(set);
    }
    levels.push_back(previous);
  }
  IntPoly out = balanced_product(std::move(levels));
  return out.shifted(q_exponent);
}

IntPoly CycloProduct::expand(QObjectCache& cache) const {
  if (unit.get_den() != 1) throw std::domain_error("CycloProduct::expand: non-integral unit");
  return expand_monic(cache) * unit.get_num();
}

RatFunc reduce_over(const RatPoly& num, const CycloProduct& den, QObjectCache& cache, const IntPoly* expanded_den) {
  if (den.unit == 0) throw std::domain_error("reduce_over: zero denominator");
  if (num.is_zero()) return {};
  IntPoly top = num.prim();
  CycloProduct rest;
  bool cancelled = false;

  const std::size_t q_cancel = std::min(den.q_exponent, top.low_order());
  if (q_cancel > 0) {
    top = top.unshifted(q_cancel);
    cancelled = true;
  }
  rest.q_exponent = den.q_exponent - q_cancel;

  for (const auto& [d, e] : den.factors) {
    unsigned remaining = e;
    while (remaining > 0) {
      auto quotient = divide_by_cyclotomic(top, d, cache);
      if (!quotient) break;
      top = std::move(*quotient);
      --remaining;
      cancelled = true;
    }
    if (remaining > 0) rest.factors[d] = remaining;
  }

  const RatPoly reduced_num(num.scale(), top);
  if (!cancelled && expanded_den) return RatFunc::from_coprime(reduced_num, RatPoly(*expanded_den));
  return RatFunc::from_coprime(reduced_num, RatPoly(den.unit, rest.expand_monic(cache)));
}

}  // namespace qcongr
