#include "qcongr/rat_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qcongr {

namespace {

// Heuristic gcd gives up past this many bits in an evaluated polynomial.
constexpr std::size_t kHeuristicBitLimit = std::size_t{1} << 26;

Integer max_norm(const IntPoly& p) {
  Integer m = 0;
  for (const auto& c : p.coeffs()) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

}  // namespace

RatPoly RatPoly::raw(Rational scale, IntPoly prim) {
  RatPoly r;
  if (prim.is_zero() || scale == 0) return r;
  r.scale_ = std::move(scale);
  r.prim_ = std::move(prim);
  return r;
}

RatPoly::RatPoly(const IntPoly& p) : RatPoly(Rational(1), p) {}

RatPoly::RatPoly(Rational scale, const IntPoly& p) {
  scale.canonicalize();
  if (p.is_zero() || scale == 0) return;
  Integer c = p.content();
  if (sgn(p.leading()) < 0) c = -c;
  prim_ = (c == 1) ? p : p.divexact(c);
  scale_ = scale * Rational(c);
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(c, IntPoly::constant(1)); }

RatPoly RatPoly::q_power(std::size_t m) { return raw(Rational(1), IntPoly::monomial(1, m)); }

Rational RatPoly::coeff(std::size_t i) const {
  if (is_zero()) return 0;
  Rational r(prim_.coeff(i));
  return r * scale_;
}

Rational RatPoly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
  return Rational(prim_.leading()) * scale_;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  Rational s(1);
  s /= Rational(prim_.leading());
  return raw(std::move(s), prim_);
}

RatPoly RatPoly::pow(unsigned long e) const {
  if (e == 0) return constant(1);
  if (is_zero()) return {};
  Rational s;
  mpz_pow_ui(s.get_num_mpz_t(), scale_.get_num_mpz_t(), e);
  mpz_pow_ui(s.get_den_mpz_t(), scale_.get_den_mpz_t(), e);
  // Gauss: powers of primitive polynomials stay primitive.
  return raw(std::move(s), prim_.pow(e));
}

std::optional<IntPoly> RatPoly::to_int_poly() const {
  if (is_zero()) return IntPoly{};
  if (scale_.get_den() != 1) return std::nullopt;
  return prim_ * scale_.get_num();
}

RatPoly RatPoly::operator-() const { return raw(-scale_, prim_); }

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.prim_ == b.prim_) {
    Rational s = a.scale_ + b.scale_;
    return RatPoly::raw(std::move(s), a.prim_);
  }
  const Integer& da = a.scale_.get_den();
  const Integer& db = b.scale_.get_den();
  Integer g;
  mpz_gcd(g.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
  Integer lcm = (da / g) * db;
  Integer ca = a.scale_.get_num() * (lcm / da);
  Integer cb = b.scale_.get_num() * (lcm / db);
  IntPoly sum = a.prim_ * ca;
  sum.add_scaled_shifted(b.prim_, cb, 0);
  return RatPoly(Rational(Integer(1), lcm), sum);
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Gauss: the product of primitive polynomials is primitive.
  return RatPoly::raw(a.scale_ * b.scale_, a.prim_ * b.prim_);
}

RatPoly operator*(const RatPoly& a, const Rational& c) {
  if (a.is_zero() || c == 0) return {};
  return RatPoly::raw(a.scale_ * c, a.prim_);
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) { return a * b; }

DivRem poly_divrem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {RatPoly{}, RatPoly{}};
  auto pd = pseudo_divrem(a.prim(), b.prim());
  // m * pa = Q * pb + R, so a = (sa / (m sb)) Q * b + (sa / m) R.
  Rational rem_scale = a.scale() / Rational(pd.multiplier);
  Rational quot_scale = rem_scale / b.scale();
  return {RatPoly(quot_scale, pd.quot), RatPoly(rem_scale, pd.rem)};
}

Rational poly_eval(const RatPoly& a, const Rational& x) {
  if (a.is_zero()) return 0;
  const auto coeffs = a.prim().coeffs();
  Rational acc = 0;
  if (x == 1) {
    Integer s = 0;
    for (const auto& c : coeffs) s += c;
    acc = Rational(s);
  } else if (x.get_den() == 1) {
    acc = Rational(a.prim().eval(x.get_num()));
  } else {
    // Horner over a common denominator: sum c_i u^i v^(d-i) / v^d.
    const Integer& u = x.get_num();
    const Integer& v = x.get_den();
    Integer num = 0;
    Integer vpow = 1;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      num = num * u + coeffs[i] * vpow;
      vpow *= v;
    }
    vpow /= v;
    acc = Rational(num, vpow);
    acc.canonicalize();
  }
  return acc * a.scale();
}

IntPoly primitive_gcd_prs(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_divrem(x, y).rem;
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

std::optional<IntPoly> primitive_gcd_heuristic(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  const std::size_t deg = std::max(a.size(), b.size());
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * deg > kHeuristicBitLimit) return std::nullopt;
    Integer gamma;
    const Integer ea = a.eval(xi);
    const Integer eb = b.eval(xi);
    mpz_gcd(gamma.get_mpz_t(), ea.get_mpz_t(), eb.get_mpz_t());

    std::vector<Integer> digits;
    Integer d;
    Integer twice;
    while (gamma != 0) {
      mpz_fdiv_r(d.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
      twice = 2 * d;
      if (twice > xi) d -= xi;
      digits.push_back(d);
      gamma -= d;
      mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
    }
    IntPoly g = IntPoly(std::move(digits)).primitive_part();
    if (!g.is_zero() && divide_exact(a, g) && divide_exact(b, g)) return g;

    xi = (xi * 73794) / 27011;
  }
  return std::nullopt;
}

IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return IntPoly::constant(1);

  const std::size_t la = a.low_order();
  const std::size_t lb = b.low_order();
  const std::size_t shift = std::min(la, lb);
  IntPoly x = a.unshifted(la).primitive_part();
  IntPoly y = b.unshifted(lb).primitive_part();
  if (x.is_constant() || y.is_constant()) return IntPoly::monomial(1, shift);
  if (x == y) return x.shifted(shift);

  if (auto g = primitive_gcd_heuristic(x, y)) return g->shifted(shift);
  return primitive_gcd_prs(x, y).shifted(shift);
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return RatPoly(primitive_gcd(a.prim(), b.prim())).monic();
}

}  // namespace qcongr
