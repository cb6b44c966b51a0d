#include "invred/gfp.hpp"

#include <ostream>
#include <string>

#include "invred/error.hpp"

namespace invred {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Shape: return "shape";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Singular: return "singular";
    case ErrorCode::GroupTooLarge: return "group-too-large";
    case ErrorCode::Resource: return "resource";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::NotFixed: return "point-not-fixed";
    case ErrorCode::NotInvariant: return "not-invariant";
    case ErrorCode::VanishesAtPoint: return "vanishes-at-point";
    case ErrorCode::Inhomogeneous: return "inhomogeneous";
    case ErrorCode::InternalConsistency: return "internal-consistency";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) {
  if (value > kMax) {
    throw Error(ErrorCode::Domain, "modulus " + std::to_string(value) + " exceeds the supported maximum");
  }
  if (!is_prime(value)) {
    throw Error(ErrorCode::Domain, "modulus " + std::to_string(value) + " is not prime");
  }
  value_ = static_cast<std::uint32_t>(value);
}

namespace mod {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept {
  std::uint32_t result = 1 % p;
  std::uint32_t base = a % p;
  while (e != 0) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in GF(" + std::to_string(p) + ")");
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return reduce(old_s, p);
}

std::uint32_t reduce(std::int64_t a, std::uint32_t p) noexcept {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace mod

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!(modulus_ == o.modulus_)) {
    throw Error(ErrorCode::Shape, "field elements over GF(" + std::to_string(p()) + ") and GF(" +
                                      std::to_string(o.p()) + ") cannot be combined");
  }
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  residue_ = mod::add(residue_, o.residue_, p());
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  residue_ = mod::sub(residue_, o.residue_, p());
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  residue_ = mod::mul(residue_, o.residue_, p());
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same_field(o);
  residue_ = mod::mul(residue_, mod::inv(o.residue_, p()), p());
  return *this;
}

FieldElement FieldElement::inverse() const { return from_residue(mod::inv(residue_, p()), modulus_); }

FieldElement FieldElement::pow(std::uint64_t e) const {
  return from_residue(mod::pow(residue_, e, p()), modulus_);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.residue(); }

FieldElement fe_inv(const FieldElement& a) { return a.inverse(); }

namespace {

// C(n, k) mod p for digits 0 <= k, n < p, by the multiplicative formula.
std::uint32_t small_binomial(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint32_t num = 1 % p;
  std::uint32_t den = 1 % p;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = mod::mul(num, static_cast<std::uint32_t>((n - i) % p), p);
    den = mod::mul(den, static_cast<std::uint32_t>((i + 1) % p), p);
  }
  return mod::mul(num, mod::inv(den, p), p);
}

}  // namespace

std::vector<LucasFactor> lucas_factors(std::uint64_t a, std::uint64_t b, Prime p) {
  const std::uint64_t q = p.value();
  std::vector<LucasFactor> factors;
  while (a != 0 || b != 0) {
    const std::uint64_t ad = a % q;
    const std::uint64_t bd = b % q;
    factors.push_back({ad, bd, small_binomial(ad, bd, p.value())});
    a /= q;
    b /= q;
  }
  return factors;
}

FieldElement lucas_binomial(std::uint64_t a, std::uint64_t b, Prime p) {
  std::uint32_t value = 1 % p.value();
  for (const auto& f : lucas_factors(a, b, p)) {
    value = mod::mul(value, f.value, p.value());
    if (value == 0) break;
  }
  return FieldElement::from_residue(value, p);
}

std::uint64_t checked_power(std::uint64_t base, unsigned e) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && result > UINT64_MAX / base) {
      throw Error(ErrorCode::Domain, "power " + std::to_string(base) + "^" + std::to_string(e) + " overflows");
    }
    result *= base;
  }
  return result;
}

bool lemma_congruence_holds(Prime p, unsigned r, std::uint64_t d, std::int64_t k, std::int64_t j) {
  if (d < 1) throw Error(ErrorCode::Domain, "d must be at least 1");
  const std::uint64_t pr = checked_power(p.value(), r);
  if (pr > UINT64_MAX / d) throw Error(ErrorCode::Domain, "p^r d overflows");
  if (k < 1 || static_cast<std::uint64_t>(k) > pr) {
    throw Error(ErrorCode::Domain, "k must satisfy 1 <= k <= p^r");
  }
  if (j < 0 || static_cast<std::uint64_t>(j) > pr - static_cast<std::uint64_t>(k)) {
    throw Error(ErrorCode::Domain, "j must satisfy 0 <= j <= p^r - k");
  }
  const auto uk = static_cast<std::uint64_t>(k);
  const auto uj = static_cast<std::uint64_t>(j);
  return lucas_binomial(pr * d - uk, uj, p) == lucas_binomial(pr - uk, uj, p);
}

}  // namespace invred
