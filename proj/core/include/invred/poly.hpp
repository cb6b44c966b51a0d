#pragma once

// Sparse multivariate polynomials over GF(p).
//
// Equality is formal: two polynomials are equal iff their coefficient maps
// agree, even when they coincide as functions on GF(p)^n (x^p versus x).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "invred/gfp.hpp"
#include "invred/matrix.hpp"

namespace invred {

/// Exponent vector with cached total degree, ordered graded-lexicographically
/// (total degree first, then larger exponent of x0, then of x1, ...).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return exponents_[i]; }
  std::size_t nvars() const noexcept { return exponents_.size(); }
  std::uint64_t degree() const noexcept { return degree_; }

  Monomial operator*(const Monomial& other) const;

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exponents_ == b.exponents_;
  }

  std::string to_string() const;

 private:
  std::vector<std::uint32_t> exponents_;
  std::uint64_t degree_ = 0;
};

class Polynomial {
 public:
  /// Terms keyed by monomial, largest (leading) monomial first.
  using TermMap = std::map<Monomial, std::uint32_t, std::greater<>>;

  Polynomial(Prime p, std::size_t nvars);

  static Polynomial constant(Prime p, std::size_t nvars, std::int64_t c);
  static Polynomial variable(Prime p, std::size_t nvars, std::size_t index);
  static Polynomial term(const Monomial& m, const FieldElement& c);
  /// Linear form sum_j coeffs[j] x_j.
  static Polynomial linear(std::span<const FieldElement> coeffs);

  Prime prime() const noexcept { return prime_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  FieldElement coefficient(const Monomial& m) const;
  /// Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const FieldElement& c);
  void add_term_raw(const Monomial& m, std::uint32_t residue);

  /// Largest monomial; throws ErrorCode::Domain on the zero polynomial.
  const Monomial& leading_monomial() const;
  /// Highest total degree; 0 for the zero polynomial.
  std::uint64_t total_degree() const noexcept;
  /// True for the zero polynomial and for polynomials whose terms share one degree.
  bool is_homogeneous() const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const FieldElement& c);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.prime_ == b.prime_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, leading term first, e.g. "x0^2 + 2*x0*x1".
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& g) const;

  Prime prime_;
  std::size_t nvars_;
  TermMap terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const Polynomial& f, const FieldElement& c);
Polynomial poly_pow(const Polynomial& f, std::uint64_t e);

/// f(v). Throws ErrorCode::Shape when v.size() != f.nvars().
FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> v);

/// Sum of the terms of total degree exactly d.
Polynomial homogeneous_component(const Polynomial& f, std::uint64_t d);

/// Replaces x_i by sum_j m(i, j) x_j (row i of m is the image of x_i).
/// Consequently evaluate(linear_substitute(f, m), v) == evaluate(f, m v).
Polynomial linear_substitute(const Polynomial& f, const Matrix& m);

/// All monomials of degree d in nvars variables, largest first in
/// graded-lex order. There are C(nvars + d - 1, d) of them.
std::vector<Monomial> monomial_basis(std::size_t nvars, std::uint64_t d);

/// Number of monomials of degree d in nvars variables, saturating at SIZE_MAX.
std::size_t slice_dimension(std::size_t nvars, std::uint64_t d) noexcept;

}  // namespace invred
