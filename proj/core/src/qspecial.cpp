#include "qcongr/qspecial.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qcongr/rat_poly.hpp"

namespace qcongr {

namespace {

unsigned long pow_mod(unsigned long base, unsigned long exp, unsigned long mod) {
  unsigned long long result = 1;
  unsigned long long b = base % mod;
  while (exp > 0) {
    if (exp & 1UL) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<unsigned long>(result);
}

bool is_prime(unsigned long n) {
  Integer z(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

RootOfUnityModP find_root_of_unity(unsigned long d) {
  constexpr unsigned long kFloor = 1UL << 30;
  constexpr unsigned long kCeil = 1UL << 31;
  unsigned long t = (kFloor + d - 1) / d;
  unsigned long p = t * d + 1;
  while (!is_prime(p)) p += d;
  if (p >= kCeil) throw std::out_of_range("cyclotomic index too large for the modular filter");

  const auto factors = prime_factors(d);
  for (unsigned long a = 2; a < p; ++a) {
    const unsigned long w = pow_mod(a, (p - 1) / d, p);
    bool primitive = true;
    for (unsigned long ell : factors) {
      if (pow_mod(w, d / ell, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return {p, w};
  }
  throw std::logic_error("no primitive root of unity found");
}

IntPoly q_power_minus_one(unsigned long n) {
  std::vector<Integer> v(n + 1);
  v[0] = -1;
  v[n] = 1;
  return IntPoly(std::move(v));
}

// Rolling q-Pascal over rows 0..last_row keeping columns 0..max_col; calls
// visit(row, cols) after each row is complete.
template <typename Visit>
void q_pascal_sweep(unsigned long last_row, unsigned long max_col, Visit&& visit) {
  std::vector<IntPoly> prev;
  std::vector<IntPoly> cur;
  for (unsigned long m = 0; m <= last_row; ++m) {
    const unsigned long width = std::min(m, max_col) + 1;
    cur.assign(width, IntPoly{});
    cur[0] = IntPoly::constant(1);
    for (unsigned long j = 1; j < width; ++j) {
      // [m j] = [m-1 j-1] + q^j [m-1 j]
      IntPoly v = prev[j - 1];
      if (j < prev.size()) v.add_scaled_shifted(prev[j], Integer(1), j);
      cur[j] = std::move(v);
    }
    visit(m, cur);
    std::swap(prev, cur);
  }
}

}  // namespace

std::vector<unsigned long> divisors(unsigned long n) {
  if (n == 0) throw std::invalid_argument("divisors of 0");
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<unsigned long> prime_factors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned long euler_phi(unsigned long n) {
  if (n == 0) throw std::invalid_argument("euler_phi(0)");
  unsigned long result = n;
  for (unsigned long p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::optional<PrimePower> as_prime_power(unsigned long n) {
  if (n < 2) return std::nullopt;
  const auto ps = prime_factors(n);
  if (ps.size() != 1) return std::nullopt;
  unsigned a = 0;
  for (unsigned long m = n; m > 1; m /= ps[0]) ++a;
  return PrimePower{ps[0], a};
}

// ---------------------------------------------------------------------------

QObjectCache::QObjectCache(std::size_t binomial_row_limit) : row_limit_(binomial_row_limit) {}

QObjectCache& QObjectCache::shared() {
  static QObjectCache cache;
  return cache;
}

const IntPoly& QObjectCache::insert_cyclotomic(unsigned long n, IntPoly value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = cyclotomic_.try_emplace(n, nullptr);
  if (inserted) it->second = std::make_unique<IntPoly>(std::move(value));
  return *it->second;
}

const IntPoly& QObjectCache::cyclotomic(unsigned long n) {
  if (n == 0) throw std::invalid_argument("cyclotomic index must be positive");
  {
    std::shared_lock lock(mutex_);
    if (auto it = cyclotomic_.find(n); it != cyclotomic_.end()) return *it->second;
  }
  // q^n - 1 divided by Phi_d for every proper divisor d.
  IntPoly poly = q_power_minus_one(n);
  for (unsigned long d : divisors(n)) {
    if (d == n) break;
    auto quotient = divide_exact(poly, cyclotomic(d));
    if (!quotient) throw std::logic_error("cyclotomic: inexact division");
    poly = std::move(*quotient);
  }
  return insert_cyclotomic(n, std::move(poly));
}

bool QObjectCache::offer_cyclotomic(unsigned long n, const IntPoly& candidate) {
  if (n == 0 || candidate.is_zero()) return false;
  if (candidate.leading() != 1 || *candidate.degree() != euler_phi(n)) return false;
  if (!divide_exact(q_power_minus_one(n), candidate)) return false;
  for (unsigned long p : prime_factors(n)) {
    const IntPoly g = primitive_gcd(candidate, q_power_minus_one(n / p));
    if (!g.is_constant()) return false;
  }
  {
    std::unique_lock lock(mutex_);
    cyclotomic_[n] = std::make_unique<IntPoly>(candidate);
  }
  return true;
}

bool QObjectCache::has_cyclotomic(unsigned long n) const {
  std::shared_lock lock(mutex_);
  return cyclotomic_.count(n) != 0;
}

std::vector<unsigned long> QObjectCache::cached_cyclotomic_indices() const {
  std::shared_lock lock(mutex_);
  std::vector<unsigned long> out;
  out.reserve(cyclotomic_.size());
  for (const auto& [n, _] : cyclotomic_) out.push_back(n);
  std::sort(out.begin(), out.end());
  return out;
}

void QObjectCache::prepopulate(unsigned long max_index) {
  for (unsigned long d = 1; d <= max_index; ++d) {
    cyclotomic(d);
    root_of_unity(d);
  }
}

const IntPoly& QObjectCache::pochhammer(unsigned long m) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = pochhammer_.find(m); it != pochhammer_.end()) return *it->second;
  }
  IntPoly value = IntPoly::constant(1);
  if (m > 0) {
    value = pochhammer(m - 1);
    value.add_scaled_shifted(pochhammer(m - 1), Integer(-1), m);
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = pochhammer_.try_emplace(m, nullptr);
  if (inserted) it->second = std::make_unique<IntPoly>(std::move(value));
  return *it->second;
}

IntPoly QObjectCache::q_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  const auto un = static_cast<unsigned long>(n);
  const auto uk = static_cast<unsigned long>(std::min(k, n - k));
  if (un < row_limit_) {
    {
      std::shared_lock lock(mutex_);
      if (un < binomial_rows_.size()) return binomial_rows_[un][uk];
    }
    std::unique_lock lock(mutex_);
    while (binomial_rows_.size() <= un) {
      const unsigned long m = binomial_rows_.size();
      std::vector<IntPoly> row(m + 1);
      row[0] = IntPoly::constant(1);
      row[m] = IntPoly::constant(1);
      for (unsigned long j = 1; j < m; ++j) {
        IntPoly v = binomial_rows_[m - 1][j - 1];
        v.add_scaled_shifted(binomial_rows_[m - 1][j], Integer(1), j);
        row[j] = std::move(v);
      }
      binomial_rows_.push_back(std::move(row));
    }
    return binomial_rows_[un][uk];
  }
  IntPoly result;
  q_pascal_sweep(un, uk, [&](unsigned long m, const std::vector<IntPoly>& row) {
    if (m == un) result = row[uk];
  });
  return result;
}

RootOfUnityModP QObjectCache::root_of_unity(unsigned long d) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = roots_.find(d); it != roots_.end()) return it->second;
  }
  const RootOfUnityModP r = find_root_of_unity(d);
  std::unique_lock lock(mutex_);
  roots_.emplace(d, r);
  return r;
}

void QObjectCache::clear() {
  std::unique_lock lock(mutex_);
  cyclotomic_.clear();
  pochhammer_.clear();
  roots_.clear();
  binomial_rows_.clear();
}

// ---------------------------------------------------------------------------

IntPoly cyclotomic(unsigned long n, QObjectCache& cache) { return cache.cyclotomic(n); }

IntPoly q_integer(unsigned long n) {
  if (n == 0) throw std::invalid_argument("q_integer: n must be positive");
  return IntPoly(std::vector<Integer>(n, Integer(1)));
}

IntPoly q_pochhammer(unsigned long n, QObjectCache& cache) { return cache.pochhammer(n); }

IntPoly q_binomial(long n, long k, QObjectCache& cache) { return cache.q_binomial(n, k); }

IntPoly q_integer_base(unsigned long p, unsigned long m) {
  if (p == 0 || m == 0) throw std::invalid_argument("q_integer_base: p and m must be positive");
  std::vector<Integer> v((p - 1) * m + 1);
  for (unsigned long i = 0; i < p; ++i) v[i * m] = 1;
  return IntPoly(std::move(v));
}

std::vector<IntPoly> q_binomial_diagonal(unsigned long n, unsigned long count) {
  std::vector<IntPoly> out(count);
  if (count == 0) return out;
  q_pascal_sweep(n + count - 1, count - 1, [&](unsigned long m, const std::vector<IntPoly>& row) {
    if (m >= n && m - n < count) out[m - n] = row[m - n];
  });
  return out;
}

std::map<unsigned long, unsigned> q_binomial_factorization(unsigned long n, unsigned long k) {
  if (k > n) throw std::invalid_argument("q_binomial_factorization: k > n");
  std::map<unsigned long, unsigned> out;
  for (unsigned long d = 2; d <= n; ++d) {
    const unsigned long e = n / d - k / d - (n - k) / d;
    if (e > 0) out[d] = static_cast<unsigned>(e);
  }
  return out;
}

// ---------------------------------------------------------------------------

IntPoly FactoredModulus::expand(QObjectCache& cache) const {
  IntPoly out = IntPoly::constant(1);
  for (const auto& [d, e] : factors) out = out * cache.cyclotomic(d).pow(e);
  return out;
}

std::string FactoredModulus::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, e] : factors) {
    if (!first) os << " * ";
    first = false;
    os << "cyc(" << d << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

FactoredModulus& FactoredModulus::operator*=(const FactoredModulus& other) {
  for (const auto& [d, e] : other.factors) factors[d] += e;
  return *this;
}

FactoredModulus build_modulus(const ModulusSpec& spec, unsigned long n, std::optional<unsigned long> p) {
  if (n == 0) throw std::invalid_argument("build_modulus: n must be positive");
  FactoredModulus m;
  auto add_qint = [&] {
    for (unsigned long d : divisors(n)) {
      if (d > 1) m.factors[d] += 1;
    }
  };
  switch (spec.kind) {
    case ModulusKind::PhiPow:
      if (spec.exponent > 0) m.factors[n] += spec.exponent;
      break;
    case ModulusKind::QInt:
      add_qint();
      break;
    case ModulusKind::QIntTimesPhiPow:
      add_qint();
      if (spec.exponent > 0) m.factors[n] += spec.exponent;
      break;
    case ModulusKind::PrimePowerSquare: {
      const auto pp = as_prime_power(n);
      if (!pp) throw std::invalid_argument("build_modulus: " + std::to_string(n) + " is not a prime power");
      if (p && *p != pp->prime) {
        throw std::invalid_argument("build_modulus: " + std::to_string(n) + " is not a power of " + std::to_string(*p));
      }
      // [p]_{q^m} = (q^{pm} - 1)/(q^m - 1) = prod of Phi_d over d | pm, d not dividing m.
      const unsigned long base = n / pp->prime;
      for (unsigned long d : divisors(n)) {
        if (base % d != 0) m.factors[d] += 2;
      }
      break;
    }
  }
  return m;
}

bool may_be_divisible_by_cyclotomic(const IntPoly& f, unsigned long d, QObjectCache& cache) {
  if (f.is_zero()) return true;
  const RootOfUnityModP r = cache.root_of_unity(d);
  return f.eval_mod(r.root, r.prime) == 0;
}

std::optional<IntPoly> divide_by_cyclotomic(const IntPoly& f, unsigned long d, QObjectCache& cache) {
  if (!may_be_divisible_by_cyclotomic(f, d, cache)) return std::nullopt;
  return divide_exact(f, cache.cyclotomic(d));
}

}  // namespace qcongr
