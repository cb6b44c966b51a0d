#pragma once

// Arithmetic in the prime field GF(p) and binomial coefficients modulo p.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace invred {

/// A prime modulus. Primality is checked on construction, so every
/// FieldElement built on top of it lives in a genuine field.
class Prime {
 public:
  /// Largest accepted prime; keeps every residue product inside 64 bits.
  static constexpr std::uint64_t kMax = (std::uint64_t{1} << 31) - 1;

  explicit Prime(std::uint64_t value);

  std::uint32_t value() const noexcept { return value_; }

  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint32_t value_;
};

bool is_prime(std::uint64_t n) noexcept;

namespace mod {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) noexcept { return a == 0 ? 0 : p - a; }

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept;

/// Inverse by the extended Euclidean algorithm; throws on a == 0.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

/// Reduces any signed integer into [0, p).
std::uint32_t reduce(std::int64_t a, std::uint32_t p) noexcept;

}  // namespace mod

class FieldElement {
 public:
  FieldElement(std::int64_t value, Prime modulus)
      : residue_(mod::reduce(value, modulus.value())), modulus_(modulus) {}

  static FieldElement zero(Prime p) { return FieldElement(0, p); }
  static FieldElement one(Prime p) { return FieldElement(1, p); }
  static FieldElement from_residue(std::uint32_t r, Prime p) {
    FieldElement e(0, p);
    e.residue_ = r % p.value();
    return e;
  }

  std::uint32_t residue() const noexcept { return residue_; }
  Prime modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return residue_ == 0; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  FieldElement operator-() const { return from_residue(mod::neg(residue_, p()), modulus_); }
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::uint32_t p() const noexcept { return modulus_.value(); }
  void check_same_field(const FieldElement& o) const;

  std::uint32_t residue_;
  Prime modulus_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

/// Multiplicative inverse; throws ErrorCode::DivisionByZero for a == 0.
FieldElement fe_inv(const FieldElement& a);

/// One factor C(a_i, b_i) of the digit-wise product in Lucas' theorem.
struct LucasFactor {
  std::uint64_t top;     // base-p digit of a
  std::uint64_t bottom;  // base-p digit of b
  std::uint32_t value;   // C(top, bottom) mod p
};

/// Base-p digit pairs of (a, b), least significant first, covering every
/// nonzero digit of either argument. Empty when a == b == 0.
std::vector<LucasFactor> lucas_factors(std::uint64_t a, std::uint64_t b, Prime p);

/// C(a, b) mod p as the product of digit-wise binomials. Returns 0 for b > a.
FieldElement lucas_binomial(std::uint64_t a, std::uint64_t b, Prime p);

/// Checks C(p^r d - k, j) == C(p^r - k, j) mod p for 1 <= k <= p^r and
/// 0 <= j <= p^r - k. Throws ErrorCode::Domain outside that range or when
/// p^r d overflows.
bool lemma_congruence_holds(Prime p, unsigned r, std::uint64_t d, std::int64_t k, std::int64_t j);

/// p^e, throwing ErrorCode::Domain on 64-bit overflow.
std::uint64_t checked_power(std::uint64_t base, unsigned e);

}  // namespace invred
