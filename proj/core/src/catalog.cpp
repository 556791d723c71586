#include "qcongr/catalog.hpp"

#include <stdexcept>

namespace qcongr::suite {

namespace {

using K = StatementKind;

const std::vector<StatementInfo> kCatalog = {
    {K::AA2, "AA2", false, AuxParam::None, false, false, true},
    {K::AA3, "AA3", false, AuxParam::None, false, false, false},
    {K::AA4, "AA4", false, AuxParam::None, false, false, false},
    {K::AA5, "AA5", true, AuxParam::None, false, false, false},
    {K::A1, "A1", true, AuxParam::None, false, false, false},
    {K::CONJ1, "CONJ1", true, AuxParam::None, false, false, false},
    {K::B4, "B4", false, AuxParam::None, false, false, false},
    {K::B5, "B5", false, AuxParam::None, false, false, false},
    {K::NEW4, "NEW4", false, AuxParam::K, false, false, false},
    {K::BINOM_STEP, "BINOM_STEP", true, AuxParam::K, false, false, false},
    {K::B1, "B1", true, AuxParam::None, false, false, false},
    {K::B2, "B2", true, AuxParam::None, false, true, false},
    {K::B3, "B3", false, AuxParam::None, false, true, false},
    {K::B6, "B6", false, AuxParam::None, false, false, false},
    {K::NEW2_ORDER2, "NEW2_ORDER2", false, AuxParam::S, false, false, false},
    {K::NEW2_ORDER3, "NEW2_ORDER3", false, AuxParam::S, false, false, false},
    {K::NEW3, "NEW3", true, AuxParam::None, false, false, false},
    {K::B9, "B9", true, AuxParam::None, false, false, false},
    {K::B10_VS_B9, "B10_VS_B9", true, AuxParam::None, false, false, false},
    {K::B11, "B11", true, AuxParam::None, false, false, false},
    {K::GUGUO_OPEN, "GUGUO_OPEN", false, AuxParam::None, true, false, false},
};

// The sum of the main family, written once and reused by the renderings.
constexpr const char* kSumR =
    "sum(k, 0, n - 1, q^(r * (n - k)^2 + (r - 1) * k) * qbin(n + k, k)^(2 * r) * qbin(n - 1, k)^(2 * r))";
constexpr const char* kSum1 = "sum(k, 0, n - 1, q^((n - k)^2) * qbin(n + k, k)^2 * qbin(n - 1, k)^2)";
constexpr const char* kTheorem =
    "q^((r - 1) * n + 1) * qint(n) - r * (2 * r - 1) * (n - 1)^2 * q * (1 - q)^2 / 4 * qint(n)^3";
constexpr const char* kExpanded =
    "q * qint(n) - q * (1 - q) * (r - 1) * qint(n)^2 - q * (1 - q)^2 * "
    "(2 * n^2 * r^2 - n^2 * r - 4 * n * r^2 + 2 * n * r + 5 * r - 4) / 4 * qint(n)^3";
constexpr const char* kInner = "sum(j, 1, k, q^j / (1 - q^j)^2)";
constexpr const char* kDouble = "sum(k, 0, n - 1, q^-k * sum(j, 1, k, q^j / (1 - q^j)^2))";

RatFunc qp(long e) { return RatFunc::q_power(e); }

long need_r(const StatementId& id) {
  if (!id.r) throw std::invalid_argument(id.label() + ": statement needs r");
  return *id.r;
}

unsigned long need_aux(const StatementId& id, AuxParam aux) {
  if (!id.aux) throw std::invalid_argument(id.label() + (aux == AuxParam::K ? ": statement needs k" : ": statement needs s"));
  const unsigned long v = *id.aux;
  if (aux == AuxParam::K && v >= id.n) throw std::invalid_argument(id.label() + ": k must satisfy 0 <= k <= n-1");
  if (aux == AuxParam::S && v > 3 * id.n) throw std::invalid_argument(id.label() + ": s must satisfy 0 <= s <= 3n");
  return v;
}

FactoredModulus phi_pow(unsigned long n, unsigned e) { return build_modulus({ModulusKind::PhiPow, e}, n); }

Verdict identity_verdict(const StatementId& id, const RatFunc& lhs, const RatFunc& rhs, QObjectCache& cache) {
  if (lhs == rhs) return Verdict::holds("exact identity");
  return Verdict::fails({id.n, Exponent::infinite(), cyclo_valuation(lhs - rhs, id.n, cache)},
                        "sides differ; expected an exact identity");
}

}  // namespace

const std::vector<StatementInfo>& statement_catalog() { return kCatalog; }

const StatementInfo& statement_info(StatementKind kind) {
  for (const auto& info : kCatalog) {
    if (info.kind == kind) return info;
  }
  throw std::invalid_argument("unknown statement kind");
}

std::optional<StatementKind> parse_statement_name(std::string_view name) {
  for (const auto& info : kCatalog) {
    if (info.name == name) return info.kind;
  }
  return std::nullopt;
}

std::string StatementId::label() const {
  const StatementInfo& info = statement_info(kind);
  std::string out(info.name);
  out += "(n=" + std::to_string(n);
  if (r) out += ",r=" + std::to_string(*r);
  if (aux) out += (info.aux == AuxParam::S ? ",s=" : ",k=") + std::to_string(*aux);
  return out + ")";
}

StatementSides statement_sides(const StatementId& id, QObjectCache& cache) {
  const unsigned long n = id.n;
  if (n == 0) throw std::invalid_argument(id.label() + ": n must be positive");
  const long ln = static_cast<long>(n);
  switch (id.kind) {
    case K::AA2:
      throw std::invalid_argument("AA2 is an integer statement without polynomial sides");
    case K::AA3:
      return {lhs_sum(n, 1, cache), rhs_prime_power(n), build_modulus({ModulusKind::PrimePowerSquare}, n)};
    case K::AA4:
      return {lhs_sum(n, 1, cache), rhs_simple(n), phi_pow(n, 2)};
    case K::AA5:
      return {lhs_sum(n, need_r(id), cache), rhs_simple(n), phi_pow(n, 2)};
    case K::A1:
      return {lhs_sum(n, need_r(id), cache), RatFunc(), build_modulus({ModulusKind::QInt}, n)};
    case K::CONJ1: {
      const long r = need_r(id);
      return {lhs_sum(n, r, cache), rhs_theorem(n, r), build_modulus({ModulusKind::QIntTimesPhiPow, 3}, n)};
    }
    case K::B4:
      return {harmonic1(n, cache), harmonic1_rhs(n), phi_pow(n, 2)};
    case K::B5:
      return {harmonic2(n, cache), harmonic2_rhs(n), phi_pow(n, 1)};
    case K::NEW4: {
      const unsigned long k = need_aux(id, AuxParam::K);
      return {RatFunc(product_pair(n, k, cache)), product_pair_approx(n, k, cache), phi_pow(n, 4)};
    }
    case K::BINOM_STEP: {
      const long r = need_r(id);
      auto [lhs, rhs] = binom_step(n, need_aux(id, AuxParam::K), r, cache);
      return {std::move(lhs), std::move(rhs), phi_pow(n, 4)};
    }
    case K::B1: {
      const long r = need_r(id);
      return {lhs_sum(n, r, cache), chain_rhs(ChainStep::B1, n, r, cache), phi_pow(n, 4)};
    }
    case K::B2: {
      const long r = need_r(id);
      RatFunc geometric;
      for (long k = 0; k < ln; ++k) geometric += qp(-k);
      return {qp(ln * ln * r) * geometric, qp(ln * (ln * r - 1) + 1) * RatFunc(q_integer(n)), {}};
    }
    case K::B3:
      return {double_sum(n, cache), double_sum_closed_form(n, cache), {}};
    case K::B6:
      return {double_sum(n, cache), chain_rhs(ChainStep::B6, n, 0, cache), phi_pow(n, 2)};
    case K::NEW2_ORDER2:
    case K::NEW2_ORDER3: {
      const unsigned order = id.kind == K::NEW2_ORDER2 ? 2 : 3;
      const unsigned long s = need_aux(id, AuxParam::S);
      return {qp(static_cast<long>(s * n)), q_power_truncation(s, n, order), phi_pow(n, order)};
    }
    case K::NEW3: {
      const long r = need_r(id);
      return {lhs_sum(n, r, cache), chain_rhs(ChainStep::NEW3, n, r, cache), phi_pow(n, 4)};
    }
    case K::B9: {
      const long r = need_r(id);
      return {lhs_sum(n, r, cache), chain_rhs(ChainStep::B9, n, r, cache), phi_pow(n, 4)};
    }
    case K::B10_VS_B9: {
      const long r = need_r(id);
      return {rhs_theorem(n, r), chain_rhs(ChainStep::B9, n, r, cache), phi_pow(n, 4)};
    }
    case K::B11: {
      const long r = need_r(id);
      return {lhs_sum(n, r, cache), rhs_theorem(n, r), phi_pow(n, 4)};
    }
    case K::GUGUO_OPEN:
      return {lhs_sum(n, 1, cache), rhs_simple(n), build_modulus({ModulusKind::QIntTimesPhiPow, 2}, n)};
  }
  throw std::invalid_argument("unknown statement kind");
}

Verdict verify_statement(const StatementId& id, QObjectCache& cache) {
  switch (id.kind) {
    case K::AA2: {
      if (id.n == 0) throw std::invalid_argument(id.label() + ": n must be positive");
      const AperyResult res = apery_sum_mod_n(id.n);
      if (res.divisible) return Verdict::holds("integer sum divisible by n");
      return Verdict::fails({id.n, Exponent::finite(1), Exponent::finite(0)},
                            "integer sum has residue " + res.residue.get_str() + " mod n");
    }
    case K::B2: {
      const StatementSides sides = statement_sides(id, cache);
      return identity_verdict(id, sides.lhs, sides.rhs, cache);
    }
    case K::B3: {
      // Both displayed rewritings of the double sum must agree with it.
      const StatementSides sides = statement_sides(id, cache);
      const RatFunc swapped = double_sum_swapped(id.n, cache);
      if (sides.lhs != swapped) return identity_verdict(id, sides.lhs, swapped, cache);
      return identity_verdict(id, sides.lhs, sides.rhs, cache);
    }
    case K::B10_VS_B9:
      if (id.n == 0) throw std::invalid_argument(id.label() + ": n must be positive");
      return b10_equiv_b9(id.n, need_r(id), cache);
    default: {
      const StatementSides sides = statement_sides(id, cache);
      return congruent(sides.lhs, sides.rhs, sides.modulus, cache);
    }
  }
}

std::optional<std::string> dsl_rendering(StatementKind kind) {
  const std::string sum_r = kSumR;
  const std::string sum_1 = kSum1;
  switch (kind) {
    case K::AA2:
    case K::B2:
    case K::B3:
      return std::nullopt;
    case K::AA3: return sum_1 + " === q^((n - 1)^2) * qint(n) mod cyc(n)^2";
    case K::AA4: return sum_1 + " === q * qint(n) mod cyc(n)^2";
    case K::AA5: return sum_r + " === q * qint(n) mod cyc(n)^2";
    case K::A1: return sum_r + " === 0 mod qint(n)";
    case K::CONJ1: return sum_r + " === " + kTheorem + " mod qint(n) * cyc(n)^3";
    case K::B4: return "sum(j, 1, n - 1, 1 / (1 - q^j)) === (n - 1) / 2 + (n^2 - 1) * (1 - q^n) / 24 mod cyc(n)^2";
    case K::B5: return "sum(j, 1, n - 1, 1 / (1 - q^j)^2) === -(n - 1) * (n - 5) / 12 mod cyc(n)";
    case K::NEW4:
      return std::string("qbin(n + k, k) * qbin(n - 1, k) === (-1)^k * q^(n * k - k * (k + 1) / 2) * "
                         "(1 - (1 - q^n)^2 / q^n * ") +
             kInner + ") mod cyc(n)^4";
    case K::BINOM_STEP:
      return std::string("(qbin(n + k, k) * qbin(n - 1, k))^(2 * r) === q^(2 * r * n * k - r * k * (k + 1)) * "
                         "(1 - 2 * r * (1 - q^n)^2 / q^n * ") +
             kInner + ") mod cyc(n)^4";
    case K::B1:
      return sum_r + " === q^(n^2 * r) * sum(k, 0, n - 1, q^-k) - 2 * r * q^(n * (n * r - 1)) * (1 - q^n)^2 * " +
             kDouble + " mod cyc(n)^4";
    case K::B6:
      return std::string(kDouble) +
             " === 1 / (q^(n - 1) * (q - 1)) * ((n - 1) / 2 + (n - 1) * (n - 3) * (1 - q^n) / 8) mod cyc(n)^2";
    case K::NEW2_ORDER2: return "q^(s * n) === 1 - s * (1 - q^n) mod cyc(n)^2";
    case K::NEW2_ORDER3:
      return "q^(s * n) === 1 - s * (1 - q) * qint(n) + s * (s - 1) * (1 - q)^2 / 2 * qint(n)^2 mod cyc(n)^3";
    case K::NEW3:
      return sum_r +
             " === q^(n * (n * r - 1) + 1) * qint(n) + 2 * r * q^(n * (n * r - 2) + 1) * (1 - q) * qint(n)^2 * "
             "((n - 1) / 2 + (n - 1) * (n - 3) * (1 - q) * qint(n) / 8) mod cyc(n)^4";
    case K::B9: return sum_r + " === " + kExpanded + " mod cyc(n)^4";
    case K::B10_VS_B9: return std::string(kTheorem) + " === " + kExpanded + " mod cyc(n)^4";
    case K::B11: return sum_r + " === " + kTheorem + " mod cyc(n)^4";
    case K::GUGUO_OPEN: return sum_1 + " === q * qint(n) mod qint(n) * cyc(n)^2";
  }
  return std::nullopt;
}

}  // namespace qcongr::suite
