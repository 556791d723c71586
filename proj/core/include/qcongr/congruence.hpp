#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "qcongr/qspecial.hpp"
#include "qcongr/rat_func.hpp"

namespace qcongr {

/// Integer exponent that may be infinite: the valuation of zero, or the
/// largest modulus exponent of an exact equality.
class Exponent {
 public:
  constexpr Exponent() = default;
  static constexpr Exponent finite(long v) { return Exponent(false, v); }
  static constexpr Exponent infinite() { return Exponent(true, 0); }

  constexpr bool is_infinite() const { return infinite_; }
  /// Throws std::domain_error when infinite.
  long value() const;
  /// "inf" or the decimal value.
  std::string to_string() const;

  friend constexpr bool operator==(const Exponent&, const Exponent&) = default;
  friend constexpr std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Exponent(bool inf, long v) : infinite_(inf), value_(v) {}
  bool infinite_ = false;
  long value_ = 0;
};

enum class Status { Holds, Fails, IllFormed };
std::string_view to_string(Status s);

/// The cyclotomic factor at which a congruence broke down.
struct Witness {
  unsigned long factor;  // d of Phi_d
  Exponent required;
  Exponent found;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  Status status = Status::Holds;
  std::optional<Witness> witness;  // present exactly when status != Holds
  std::string detail;

  static Verdict holds(std::string detail);
  static Verdict fails(Witness w, std::string detail);
  static Verdict ill_formed(Witness w, std::string detail);
  bool is_holds() const { return status == Status::Holds; }
};

/// Exponent of Phi_d in a nonzero polynomial, stopping once `cap` is reached.
long poly_cyclo_valuation(const IntPoly& p, unsigned long d, long cap = -1,
                          QObjectCache& cache = QObjectCache::shared());

/// v with Phi_d^v exactly dividing f (negative when Phi_d divides the
/// denominator); infinite for f = 0.
Exponent cyclo_valuation(const RatFunc& f, unsigned long d,
                         QObjectCache& cache = QObjectCache::shared());

/// a = b (mod m): the normalized difference must have a denominator coprime
/// to every Phi_d in m (else IllFormed) and a numerator divisible by each
/// Phi_d^e_d (else Fails, reporting the smallest failing d).
Verdict congruent(const RatFunc& a, const RatFunc& b, const FactoredModulus& m,
                  QObjectCache& cache = QObjectCache::shared());

/// Largest e <= cap with a = b (mod Phi_d^e); infinite when a = b exactly,
/// 0 when the statement is ill-formed at d or fails already at e = 1.
Exponent max_exponent(const RatFunc& a, const RatFunc& b, unsigned long d, long cap,
                      QObjectCache& cache = QObjectCache::shared());

}  // namespace qcongr
