#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace quadlin {

/// Largest root-of-unity order an operation may produce.
inline constexpr long kMaxCycloOrder = 1'000'000;

/**
 * An exact element of the cyclotomic field Q(zeta_n).
 *
 * Values are stored in the Zumbroich basis of Q(zeta_n), where n is the
 * order the value was produced in (the lcm of the operand orders). That basis
 * is the tensor product over the prime powers p^k || n of
 *   { zeta_{p^k}^(a + b p^(k-1)) : 0 <= a < p^(k-1), b in J_p },
 * with J_2 = {0} and J_p = {1, ..., p-1} for odd p. Within one order the term
 * list is therefore unique. Reduction to the conductor happens only in
 * reduced(), key() and equality across different orders.
 */
class Cyclo {
 public:
  struct Term {
    int exponent;
    mpq_class coeff;
  };

  Cyclo() = default;
  Cyclo(long value);  // NOLINT(google-explicit-constructor)
  Cyclo(const mpq_class& value);  // NOLINT(google-explicit-constructor)

  /// zeta_order^exponent; exponent may be any integer.
  static Cyclo root(long order, long exponent);
  /// Sum of coeff * zeta_order^exponent over arbitrary (unreduced) exponents.
  static Cyclo from_terms(long order,
                          const std::vector<std::pair<long, mpq_class>>& terms);

  int order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  /// The rational value, if this element is rational.
  std::optional<mpq_class> rational() const;
  std::optional<long> integer() const;

  /// Same value expressed over its conductor.
  Cyclo reduced() const;
  int conductor() const { return reduced().order_; }

  /// Canonical text in the scalar grammar, e.g. "1/2*E(8)^1 - 1/2*E(8)^3".
  std::string key() const;
  std::complex<double> float_view() const;

  Cyclo conjugate() const;
  /// Image under zeta -> zeta^k, gcd(k, order) = 1.
  Cyclo galois(long k) const;
  Cyclo inverse() const;
  Cyclo pow(long e) const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& rhs);
  Cyclo& operator-=(const Cyclo& rhs);
  Cyclo& operator*=(const Cyclo& rhs);
  Cyclo& operator/=(const Cyclo& rhs);

  friend Cyclo operator+(Cyclo lhs, const Cyclo& rhs) { return lhs += rhs; }
  friend Cyclo operator-(Cyclo lhs, const Cyclo& rhs) { return lhs -= rhs; }
  friend Cyclo operator*(const Cyclo& lhs, const Cyclo& rhs);
  friend Cyclo operator/(const Cyclo& lhs, const Cyclo& rhs) {
    return lhs * rhs.inverse();
  }
  friend bool operator==(const Cyclo& lhs, const Cyclo& rhs);
  friend bool operator!=(const Cyclo& lhs, const Cyclo& rhs) {
    return !(lhs == rhs);
  }

 private:
  Cyclo(int order, std::vector<Term> terms)
      : order_(order), terms_(std::move(terms)) {}

  /// This value re-expressed in Q(zeta_target); order_ must divide target.
  Cyclo lifted(int target) const;

  int order_ = 1;
  std::vector<Term> terms_;
};

/// Parse the scalar grammar:
///   expr := term (('+'|'-') term)*,  term := rat | rat '*' atom | atom,
///   atom := 'E(' int ')' ['^' int],   rat := int ['/' int].
Cyclo parse_cyclo(std::string_view text);
std::string to_string(const Cyclo& value);

/// An exact square root inside some cyclotomic field, when one is found.
/// Handles rational multiples of roots of unity (via Gauss sums) and
/// elements of Q(i), as long as the root lies in Q(zeta_m) with m the lcm of
/// 8 and the conductor of the value. Returns nullopt otherwise; callers then
/// carry the radicand symbolically.
std::optional<Cyclo> try_sqrt(const Cyclo& value);

/// Total order on canonical keys, used only for deterministic tie-breaking.
bool key_less(const Cyclo& lhs, const Cyclo& rhs);

long lcm_checked(long a, long b);

}  // namespace quadlin
