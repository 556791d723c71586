#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcongr/int_poly.hpp"

namespace qcongr {

/// Sorted positive divisors of n (n >= 1), by trial division up to sqrt(n).
std::vector<unsigned long> divisors(unsigned long n);
unsigned long euler_phi(unsigned long n);
/// Distinct prime factors of n in increasing order.
std::vector<unsigned long> prime_factors(unsigned long n);

struct PrimePower {
  unsigned long prime;
  unsigned exponent;
};
/// n = p^a with a >= 1, or nullopt (n = 1 is not a prime power).
std::optional<PrimePower> as_prime_power(unsigned long n);

/// A prime p = 1 (mod d) below 2^31 and a primitive d-th root of unity
/// modulo p. Every root of Phi_d reduces to such a root, so f(root) != 0
/// (mod p) proves Phi_d does not divide f.
struct RootOfUnityModP {
  unsigned long prime;
  unsigned long root;
};

/// Memo for cyclotomic polynomials, (q;q)_m and small q-binomial rows.
/// Lookups take a shared lock; misses compute outside the lock and insert
/// under an exclusive one, so concurrent readers are safe. References
/// returned by cyclotomic() and pochhammer() stay valid until clear().
class QObjectCache {
 public:
  explicit QObjectCache(std::size_t binomial_row_limit = 64);
  QObjectCache(const QObjectCache&) = delete;
  QObjectCache& operator=(const QObjectCache&) = delete;

  static QObjectCache& shared();

  const IntPoly& cyclotomic(unsigned long n);
  const IntPoly& pochhammer(unsigned long m);
  IntPoly q_binomial(long n, long k);
  RootOfUnityModP root_of_unity(unsigned long d);

  /// Accepts an externally supplied Phi_n (e.g. from a disk cache) after
  /// checking that it is monic of degree phi(n), divides q^n - 1 and is
  /// coprime to q^(n/p) - 1 for every prime p | n. Returns false and
  /// leaves the cache untouched when the candidate is rejected.
  bool offer_cyclotomic(unsigned long n, const IntPoly& candidate);

  /// Computes Phi_1 .. Phi_max_index ahead of concurrent use.
  void prepopulate(unsigned long max_index);
  bool has_cyclotomic(unsigned long n) const;
  std::vector<unsigned long> cached_cyclotomic_indices() const;

  /// Not safe to call concurrently with any other member.
  void clear();

 private:
  const IntPoly& insert_cyclotomic(unsigned long n, IntPoly value);

  std::size_t row_limit_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<unsigned long, std::unique_ptr<IntPoly>> cyclotomic_;
  std::unordered_map<unsigned long, std::unique_ptr<IntPoly>> pochhammer_;
  std::unordered_map<unsigned long, RootOfUnityModP> roots_;
  std::vector<std::vector<IntPoly>> binomial_rows_;
};

/// The n-th cyclotomic polynomial, n >= 1.
IntPoly cyclotomic(unsigned long n, QObjectCache& cache = QObjectCache::shared());
/// [n] = 1 + q + ... + q^(n-1), n >= 1.
IntPoly q_integer(unsigned long n);
/// (q;q)_n = (1-q)(1-q^2)...(1-q^n); (q;q)_0 = 1.
IntPoly q_pochhammer(unsigned long n, QObjectCache& cache = QObjectCache::shared());
/// Gaussian binomial [n k]; zero outside 0 <= k <= n.
IntPoly q_binomial(long n, long k, QObjectCache& cache = QObjectCache::shared());
/// [p] in base q^m: 1 + q^m + ... + q^((p-1)m).
IntPoly q_integer_base(unsigned long p, unsigned long m);
/// [n+k k] for k = 0 .. count-1, by one rolling q-Pascal sweep.
std::vector<IntPoly> q_binomial_diagonal(unsigned long n, unsigned long count);
/// Exponents e_d with [n k] = prod_d Phi_d^e_d, for 0 <= k <= n.
std::map<unsigned long, unsigned> q_binomial_factorization(unsigned long n, unsigned long k);

/// Product of cyclotomic powers prod_d Phi_d^e_d; the empty map is 1.
struct FactoredModulus {
  std::map<unsigned long, unsigned> factors;

  bool is_unit() const { return factors.empty(); }
  /// Multiplies the factors out (used only for cross-checks and display).
  IntPoly expand(QObjectCache& cache = QObjectCache::shared()) const;
  /// Rendered in modulus syntax, e.g. "cyc(2) * cyc(6)^4".
  std::string to_string() const;

  FactoredModulus& operator*=(const FactoredModulus& other);
  friend bool operator==(const FactoredModulus&, const FactoredModulus&) = default;
};

enum class ModulusKind { PhiPow, QIntTimesPhiPow, QInt, PrimePowerSquare };

struct ModulusSpec {
  ModulusKind kind;
  unsigned exponent = 0;  // for PhiPow and QIntTimesPhiPow
};

/// Cyclotomic factorization of the named modulus at n. PrimePowerSquare is
/// [p]^2 in base q^(n/p) and requires n to be a power of p (p inferred
/// when omitted); std::invalid_argument otherwise.
FactoredModulus build_modulus(const ModulusSpec& spec, unsigned long n,
                              std::optional<unsigned long> p = std::nullopt);

/// Fast modular rejection test; false means Phi_d certainly does not divide f.
bool may_be_divisible_by_cyclotomic(const IntPoly& f, unsigned long d,
                                    QObjectCache& cache = QObjectCache::shared());
/// f / Phi_d when the division is exact.
std::optional<IntPoly> divide_by_cyclotomic(const IntPoly& f, unsigned long d,
                                            QObjectCache& cache = QObjectCache::shared());

}  // namespace qcongr
