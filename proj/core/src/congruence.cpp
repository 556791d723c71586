#include "qcongr/congruence.hpp"

#include <stdexcept>
#include <utility>

namespace qcongr {

long Exponent::value() const {
  if (infinite_) throw std::domain_error("infinite exponent has no finite value");
  return value_;
}

std::string Exponent::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::IllFormed: return "IllFormed";
  }
  return "?";
}

Verdict Verdict::holds(std::string detail) { return {Status::Holds, std::nullopt, std::move(detail)}; }

Verdict Verdict::fails(Witness w, std::string detail) { return {Status::Fails, w, std::move(detail)}; }

Verdict Verdict::ill_formed(Witness w, std::string detail) {
  return {Status::IllFormed, w, std::move(detail)};
}

long poly_cyclo_valuation(const IntPoly& p, unsigned long d, long cap, QObjectCache& cache) {
  if (p.is_zero()) throw std::domain_error("valuation of the zero polynomial is infinite");
  long v = 0;
  IntPoly cur = p;
  while (cap < 0 || v < cap) {
    auto quotient = divide_by_cyclotomic(cur, d, cache);
    if (!quotient) break;
    cur = std::move(*quotient);
    ++v;
  }
  return v;
}

Exponent cyclo_valuation(const RatFunc& f, unsigned long d, QObjectCache& cache) {
  if (f.is_zero()) return Exponent::infinite();
  const long up = poly_cyclo_valuation(f.num().prim(), d, -1, cache);
  if (up > 0) return Exponent::finite(up);
  return Exponent::finite(-poly_cyclo_valuation(f.den().prim(), d, -1, cache));
}

Verdict congruent(const RatFunc& a, const RatFunc& b, const FactoredModulus& m, QObjectCache& cache) {
  const RatFunc diff = a - b;
  if (diff.is_zero()) return Verdict::holds("both sides are identical");

  for (const auto& [d, e] : m.factors) {
    if (diff.den().is_constant()) break;
    const long dv = poly_cyclo_valuation(diff.den().prim(), d, -1, cache);
    if (dv > 0) {
      return Verdict::ill_formed(
          {d, Exponent::finite(e), Exponent::finite(-dv)},
          "denominator of the difference is divisible by cyc(" + std::to_string(d) + ")^" + std::to_string(dv));
    }
  }
  for (const auto& [d, e] : m.factors) {
    const long v = poly_cyclo_valuation(diff.num().prim(), d, static_cast<long>(e), cache);
    if (v < static_cast<long>(e)) {
      return Verdict::fails({d, Exponent::finite(e), Exponent::finite(v)},
                            "numerator of the difference has cyc(" + std::to_string(d) + ")-valuation " +
                                std::to_string(v) + " < " + std::to_string(e));
    }
  }
  return Verdict::holds("difference divisible by " + m.to_string());
}

Exponent max_exponent(const RatFunc& a, const RatFunc& b, unsigned long d, long cap, QObjectCache& cache) {
  if (cap < 1) throw std::invalid_argument("max_exponent: cap must be at least 1");
  const RatFunc diff = a - b;
  if (diff.is_zero()) return Exponent::infinite();
  if (!diff.den().is_constant() && poly_cyclo_valuation(diff.den().prim(), d, 1, cache) > 0) {
    return Exponent::finite(0);
  }
  return Exponent::finite(poly_cyclo_valuation(diff.num().prim(), d, cap, cache));
}

}  // namespace qcongr
