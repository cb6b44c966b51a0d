#include "invred/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "invred/error.hpp"

namespace invred {

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0})) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  if (index >= nvars) throw Error(ErrorCode::Shape, "variable index out of range");
  std::vector<std::uint32_t> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars() != other.nvars()) throw Error(ErrorCode::Shape, "monomials in different variable counts");
  std::vector<std::uint32_t> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.exponents_.begin(), a.exponents_.end(), b.exponents_.begin(),
                                                b.exponents_.end());
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

Polynomial::Polynomial(Prime p, std::size_t nvars) : prime_(p), nvars_(nvars) {}

Polynomial Polynomial::constant(Prime p, std::size_t nvars, std::int64_t c) {
  Polynomial f(p, nvars);
  f.add_term(Monomial::one(nvars), FieldElement(c, p));
  return f;
}

Polynomial Polynomial::variable(Prime p, std::size_t nvars, std::size_t index) {
  Polynomial f(p, nvars);
  f.add_term(Monomial::variable(nvars, index), FieldElement::one(p));
  return f;
}

Polynomial Polynomial::term(const Monomial& m, const FieldElement& c) {
  Polynomial f(c.modulus(), m.nvars());
  f.add_term(m, c);
  return f;
}

Polynomial Polynomial::linear(std::span<const FieldElement> coeffs) {
  if (coeffs.empty()) throw Error(ErrorCode::Shape, "linear form needs at least one coefficient");
  Polynomial f(coeffs.front().modulus(), coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) f.add_term(Monomial::variable(coeffs.size(), j), coeffs[j]);
  return f;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return FieldElement::from_residue(it == terms_.end() ? 0 : it->second, prime_);
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
  if (!(c.modulus() == prime_)) throw Error(ErrorCode::Shape, "coefficient from a different prime field");
  add_term_raw(m, c.residue());
}

void Polynomial::add_term_raw(const Monomial& m, std::uint32_t residue) {
  if (m.nvars() != nvars_) {
    throw Error(ErrorCode::Shape, "monomial has " + std::to_string(m.nvars()) + " exponents, polynomial has " +
                                      std::to_string(nvars_) + " variables");
  }
  residue %= prime_.value();
  if (residue == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, residue);
  if (inserted) return;
  it->second = mod::add(it->second, residue, prime_.value());
  if (it->second == 0) terms_.erase(it);
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::Domain, "zero polynomial has no leading monomial");
  return terms_.begin()->first;
}

std::uint64_t Polynomial::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

void Polynomial::check_compatible(const Polynomial& g) const {
  if (!(prime_ == g.prime_)) throw Error(ErrorCode::Shape, "polynomials over different prime fields");
  if (nvars_ != g.nvars_) throw Error(ErrorCode::Shape, "polynomials in different variable counts");
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = mod::neg(c, prime_.value());
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  check_compatible(g);
  for (const auto& [m, c] : g.terms_) add_term_raw(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  check_compatible(g);
  for (const auto& [m, c] : g.terms_) add_term_raw(m, mod::neg(c, prime_.value()));
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_compatible(g);
  const std::uint32_t p = f.prime_.value();
  Polynomial out(f.prime_, f.nvars_);
  for (const auto& [mf, cf] : f.terms_) {
    for (const auto& [mg, cg] : g.terms_) out.add_term_raw(mf * mg, mod::mul(cf, cg, p));
  }
  return out;
}

Polynomial operator*(const Polynomial& f, const FieldElement& c) {
  if (!(c.modulus() == f.prime_)) throw Error(ErrorCode::Shape, "scalar from a different prime field");
  Polynomial out(f.prime_, f.nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : f.terms_) {
    out.terms_.emplace_hint(out.terms_.end(), m, mod::mul(coeff, c.residue(), f.prime_.value()));
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool is_one = m.degree() == 0;
    if (c != 1 || is_one) {
      os << c;
      if (!is_one) os << '*';
    }
    if (!is_one) os << m.to_string();
  }
  return os.str();
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }
Polynomial poly_scale(const Polynomial& f, const FieldElement& c) { return f * c; }

Polynomial poly_pow(const Polynomial& f, std::uint64_t e) {
  Polynomial result = Polynomial::constant(f.prime(), f.nvars(), 1);
  Polynomial base = f;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> v) {
  if (v.size() != f.nvars()) {
    throw Error(ErrorCode::Shape, "point has " + std::to_string(v.size()) + " coordinates, polynomial has " +
                                      std::to_string(f.nvars()) + " variables");
  }
  const std::uint32_t p = f.prime().value();
  for (const auto& x : v) {
    if (!(x.modulus() == f.prime())) throw Error(ErrorCode::Shape, "point coordinates from a different field");
  }
  std::uint32_t acc = 0;
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t t = c;
    for (std::size_t i = 0; i < m.nvars() && t != 0; ++i) {
      if (m[i] != 0) t = mod::mul(t, mod::pow(v[i].residue(), m[i], p), p);
    }
    acc = mod::add(acc, t, p);
  }
  return FieldElement::from_residue(acc, f.prime());
}

Polynomial homogeneous_component(const Polynomial& f, std::uint64_t d) {
  Polynomial out(f.prime(), f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() == d) out.add_term_raw(m, c);
  }
  return out;
}

namespace {

using TermList = std::vector<std::pair<const Monomial*, std::uint32_t>>;

// Horner evaluation in x_k: sum_e x_k^e f_e  ->  (..(f_top(L) L_k + f_{top-1}(L)) L_k ..) + f_0(L),
// recursing into the x_{k+1}.. part of each f_e.
Polynomial substitute_from(const TermList& terms, std::size_t k, const std::vector<Polynomial>& images,
                           Prime p, std::size_t n) {
  Polynomial out(p, n);
  if (terms.empty()) return out;
  if (k == n) {
    std::uint32_t c = 0;
    for (const auto& t : terms) c = mod::add(c, t.second, p.value());
    out.add_term_raw(Monomial::one(n), c);
    return out;
  }
  std::map<std::uint32_t, TermList, std::greater<>> by_power;
  for (const auto& t : terms) by_power[(*t.first)[k]].push_back(t);
  std::uint32_t e = by_power.begin()->first;
  auto it = by_power.begin();
  while (true) {
    if (it != by_power.end() && it->first == e) {
      out += substitute_from(it->second, k + 1, images, p, n);
      ++it;
    }
    if (e == 0) break;
    out = out * images[k];
    --e;
  }
  return out;
}

}  // namespace

Polynomial linear_substitute(const Polynomial& f, const Matrix& m) {
  if (!m.is_square() || m.rows() != f.nvars()) {
    throw Error(ErrorCode::Shape, "substitution matrix must be " + std::to_string(f.nvars()) + "x" +
                                      std::to_string(f.nvars()));
  }
  if (!(m.prime() == f.prime())) throw Error(ErrorCode::Shape, "substitution matrix over a different field");
  const std::size_t n = f.nvars();

  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial li(f.prime(), n);
    for (std::size_t j = 0; j < n; ++j) li.add_term_raw(Monomial::variable(n, j), m.raw(i, j));
    images.push_back(std::move(li));
  }
  TermList terms;
  terms.reserve(f.size());
  for (const auto& [mono, c] : f.terms()) terms.emplace_back(&mono, c);
  return substitute_from(terms, 0, images, f.prime(), n);
}

namespace {

void fill_basis(std::size_t var, std::uint64_t remaining, std::vector<std::uint32_t>& current,
                std::vector<Monomial>& out) {
  if (var + 1 == current.size()) {
    current[var] = static_cast<std::uint32_t>(remaining);
    out.emplace_back(current);
    return;
  }
  for (std::uint64_t e = remaining + 1; e-- > 0;) {
    current[var] = static_cast<std::uint32_t>(e);
    fill_basis(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t nvars, std::uint64_t d) {
  if (nvars == 0) throw Error(ErrorCode::Shape, "monomial basis needs at least one variable");
  std::vector<Monomial> out;
  out.reserve(slice_dimension(nvars, d));
  std::vector<std::uint32_t> current(nvars, 0);
  fill_basis(0, d, current, out);
  return out;
}

std::size_t slice_dimension(std::size_t nvars, std::uint64_t d) noexcept {
  if (nvars == 0) return d == 0 ? 1 : 0;
  // C(nvars - 1 + d, nvars - 1) built incrementally; each prefix is an exact binomial.
  __extension__ using u128 = unsigned __int128;
  const std::uint64_t k = nvars - 1;
  u128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (d + i) / i;
    if (acc > SIZE_MAX) return SIZE_MAX;
  }
  return static_cast<std::size_t>(acc);
}

}  // namespace invred
