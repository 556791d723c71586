#include "qcongr/int_poly.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <utility>

namespace qcongr {

namespace {

std::atomic<std::size_t> g_karatsuba_threshold{64};

void schoolbook_accumulate(const Integer* a, std::size_t na, const Integer* b,
                           std::size_t nb, Integer* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (sgn(a[i]) == 0) continue;
    mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < nb; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
}

// out[0 .. na+nb-1) += a * b
void karatsuba_accumulate(const Integer* a, std::size_t na, const Integer* b,
                          std::size_t nb, Integer* out, std::size_t threshold) {
  if (na == 0 || nb == 0) return;
  if (na < nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  if (nb < threshold) {
    schoolbook_accumulate(a, na, b, nb, out);
    return;
  }
  if (na > nb) {
    for (std::size_t off = 0; off < na; off += nb) {
      karatsuba_accumulate(a + off, std::min(nb, na - off), b, nb, out + off, threshold);
    }
    return;
  }

  const std::size_t n = na;
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;

  std::vector<Integer> sum_a(hi), sum_b(hi);
  for (std::size_t i = 0; i < hi; ++i) {
    sum_a[i] = a[lo + i];
    sum_b[i] = b[lo + i];
    if (i < lo) {
      sum_a[i] += a[i];
      sum_b[i] += b[i];
    }
  }

  std::vector<Integer> z0(2 * lo - 1), z1(2 * hi - 1), z2(2 * hi - 1);
  karatsuba_accumulate(a, lo, b, lo, z0.data(), threshold);
  karatsuba_accumulate(a + lo, hi, b + lo, hi, z2.data(), threshold);
  karatsuba_accumulate(sum_a.data(), hi, sum_b.data(), hi, z1.data(), threshold);

  for (std::size_t i = 0; i < z0.size(); ++i) {
    z1[i] -= z0[i];
    out[i] += z0[i];
  }
  for (std::size_t i = 0; i < z2.size(); ++i) {
    z1[i] -= z2[i];
    out[2 * lo + i] += z2[i];
  }
  for (std::size_t i = 0; i < z1.size(); ++i) out[lo + i] += z1[i];
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t exponent) {
  if (c == 0) return {};
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_q_power(std::size_t j) {
  if (j == 0) return {};
  std::vector<Integer> v(j + 1);
  v[0] = 1;
  v[j] = -1;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

bool IntPoly::is_monomial() const {
  if (coeffs_.empty()) return false;
  return low_order() + 1 == coeffs_.size();
}

std::optional<std::size_t> IntPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::size_t IntPoly::low_order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return i;
  }
  throw std::domain_error("low order of the zero polynomial");
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer c = content();
  if (sgn(leading()) < 0) c = -c;
  if (c == 1) return *this;
  return divexact(c);
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

void IntPoly::add_scaled_shifted(const IntPoly& other, const Integer& c, std::size_t shift) {
  if (other.is_zero() || c == 0) return;
  const std::size_t need = other.coeffs_.size() + shift;
  if (need > coeffs_.size()) coeffs_.resize(need);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    mpz_addmul(coeffs_[i + shift].get_mpz_t(), other.coeffs_[i].get_mpz_t(), c.get_mpz_t());
  }
  trim();
}

IntPoly IntPoly::shifted(std::size_t m) const {
  if (is_zero() || m == 0) return *this;
  std::vector<Integer> v(coeffs_.size() + m);
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(m));
  IntPoly r;
  r.coeffs_ = std::move(v);
  return r;
}

IntPoly IntPoly::unshifted(std::size_t m) const {
  if (m == 0 || is_zero()) return *this;
  if (low_order() < m) throw std::domain_error("polynomial is not divisible by the requested power of q");
  return IntPoly(std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(m), coeffs_.end()));
}

IntPoly IntPoly::pow(unsigned long e) const {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

IntPoly IntPoly::divexact(const Integer& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  IntPoly r = *this;
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

IntPoly IntPoly::divide_one_minus_q_power(std::size_t j) const {
  if (j == 0) throw std::domain_error("division by 1 - q^0 = 0");
  if (is_zero()) return {};
  const std::size_t na = coeffs_.size();
  if (na <= j) throw std::domain_error("polynomial is not divisible by 1 - q^j");
  const std::size_t nc = na - j;
  std::vector<Integer> c(nc);
  for (std::size_t i = 0; i < nc; ++i) {
    c[i] = coeffs_[i];
    if (i >= j) c[i] += c[i - j];
  }
  for (std::size_t i = nc; i < na; ++i) {
    Integer tail = coeffs_[i];
    if (i >= j && i - j < nc) tail += c[i - j];
    if (sgn(tail) != 0) throw std::domain_error("polynomial is not divisible by 1 - q^j");
  }
  return IntPoly(std::move(c));
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

unsigned long IntPoly::eval_mod(unsigned long x, unsigned long p) const {
  unsigned long long acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const unsigned long c = mpz_fdiv_ui(it->get_mpz_t(), p);
    acc = (acc * x + c) % p;
  }
  return static_cast<unsigned long>(acc);
}

IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  const std::size_t threshold = g_karatsuba_threshold.load(std::memory_order_relaxed);
  if (std::min(a.size(), b.size()) >= threshold) return multiply_karatsuba(a, b);
  return multiply_schoolbook(a, b);
}

IntPoly multiply_schoolbook(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  schoolbook_accumulate(a.coeffs().data(), a.size(), b.coeffs().data(), b.size(), out.data());
  return IntPoly(std::move(out));
}

IntPoly multiply_karatsuba(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t threshold = std::max<std::size_t>(4, g_karatsuba_threshold.load(std::memory_order_relaxed));
  std::vector<Integer> out(a.size() + b.size() - 1);
  karatsuba_accumulate(a.coeffs().data(), a.size(), b.coeffs().data(), b.size(), out.data(), threshold);
  return IntPoly(std::move(out));
}

std::size_t karatsuba_threshold() { return g_karatsuba_threshold.load(); }

void set_karatsuba_threshold(std::size_t threshold) {
  g_karatsuba_threshold.store(std::max<std::size_t>(4, threshold));
}

PseudoDivision pseudo_divrem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.size() < b.size()) return {IntPoly{}, a, Integer(1)};

  const std::size_t db = b.size() - 1;
  const auto bc = b.coeffs();
  const Integer& lc = b.leading();
  Integer abs_lc = abs(lc);

  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Integer> q(a.size() - db);
  Integer multiplier = 1;
  Integer g, mult, t;

  for (std::size_t i = r.size(); i-- > db;) {
    if (sgn(r[i]) == 0) continue;
    mpz_gcd(g.get_mpz_t(), r[i].get_mpz_t(), abs_lc.get_mpz_t());
    mpz_divexact(mult.get_mpz_t(), abs_lc.get_mpz_t(), g.get_mpz_t());
    if (mult != 1) {
      for (std::size_t k = 0; k <= i; ++k) r[k] *= mult;
      for (auto& x : q) x *= mult;
      multiplier *= mult;
    }
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), lc.get_mpz_t());
    const std::size_t off = i - db;
    q[off] = t;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(r[off + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r)), multiplier};
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.size() < b.size()) return std::nullopt;

  const std::size_t db = b.size() - 1;
  const auto bc = b.coeffs();
  const Integer& lc = b.leading();
  const bool unit_lead = (lc == 1 || lc == -1);

  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Integer> q(a.size() - db);
  Integer t;
  for (std::size_t i = r.size(); i-- > db;) {
    if (sgn(r[i]) == 0) continue;
    if (unit_lead) {
      t = r[i];
      if (lc < 0) t = -t;
    } else {
      if (!mpz_divisible_p(r[i].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
      mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), lc.get_mpz_t());
    }
    const std::size_t off = i - db;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(r[off + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    }
    q[off] = t;
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (sgn(r[i]) != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

}  // namespace qcongr
