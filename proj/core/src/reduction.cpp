#include "invred/reduction.hpp"

#include <algorithm>
#include <string>

#include "invred/error.hpp"

namespace invred {

DegreeFactorization factor_p_power(std::uint64_t n, Prime p) {
  if (n == 0) throw Error(ErrorCode::Domain, "degree must be positive");
  DegreeFactorization out;
  out.d = n;
  while (out.d % p.value() == 0) {
    out.d /= p.value();
    out.p_power *= p.value();
    ++out.r;
  }
  return out;
}

Matrix extend_to_basis(const Vector& v) {
  if (v.empty()) throw Error(ErrorCode::Shape, "empty vector");
  if (std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); })) {
    throw Error(ErrorCode::Domain, "cannot extend the zero vector to a basis");
  }
  const Prime p = v.front().modulus();
  const std::size_t n = v.size();
  RowReducer span(p, n);
  std::vector<Vector> columns;
  auto offer = [&](const Vector& col) {
    std::vector<std::uint32_t> raw;
    raw.reserve(n);
    for (const auto& x : col) {
      if (!(x.modulus() == p)) throw Error(ErrorCode::Shape, "vector entries from different fields");
      raw.push_back(x.residue());
    }
    if (span.add_row(std::move(raw))) columns.push_back(col);
  };
  offer(v);
  for (std::size_t i = 0; i < n && columns.size() < n; ++i) {
    Vector e(n, FieldElement::zero(p));
    e[i] = FieldElement::one(p);
    offer(e);
  }
  return Matrix::from_columns(p, columns);
}

std::vector<Polynomial> adapted_decomposition(const Polynomial& f, const Matrix& basis, std::uint64_t degree) {
  if (!f.is_homogeneous() || (!f.is_zero() && f.total_degree() != degree)) {
    throw Error(ErrorCode::Inhomogeneous, "polynomial is not homogeneous of degree " + std::to_string(degree));
  }
  // f(w) = f(B x') where x' are the coordinates of w in the new basis
  const Polynomial adapted = linear_substitute(f, basis);
  std::vector<Polynomial> c(degree + 1, Polynomial(f.prime(), f.nvars()));
  for (const auto& [m, coeff] : adapted.terms()) {
    const std::uint64_t i = degree - m[0];
    std::vector<std::uint32_t> e = m.exponents();
    e[0] = 0;
    c[i].add_term_raw(Monomial(std::move(e)), coeff);
  }
  return c;
}

Polynomial assemble_reduced_invariant(std::span<const Polynomial> c, const DegreeFactorization& factorization) {
  if (c.empty()) throw Error(ErrorCode::Domain, "decomposition is empty");
  const Polynomial& c0 = c.front();
  const Prime p = c0.prime();
  const std::size_t n = c0.nvars();
  if (c0.is_zero() || c0.total_degree() != 0) {
    throw Error(ErrorCode::Domain, "c_0 must be a nonzero constant");
  }
  if (factorization.d % p.value() == 0) throw Error(ErrorCode::Domain, "d must be invertible mod p");

  const FieldElement c0_value = c0.coefficient(Monomial::one(n));
  const FieldElement scale = (FieldElement(static_cast<std::int64_t>(factorization.d % p.value()), p) * c0_value)
                                 .inverse();
  const std::uint64_t top = factorization.p_power;

  Polynomial out = Polynomial::term(Monomial::variable(n, 0, static_cast<std::uint32_t>(top)), FieldElement::one(p));
  for (std::uint64_t i = 1; i <= top && i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    const Polynomial x0_power =
        Polynomial::term(Monomial::variable(n, 0, static_cast<std::uint32_t>(top - i)), scale);
    out += x0_power * c[i];
  }
  return out;
}

ReductionResult reduce_degree(const GroupSpec& spec, const Polynomial& f, const Vector& v) {
  const Prime p = spec.prime();
  if (f.nvars() != spec.dimension() || !(f.prime() == p)) {
    throw Error(ErrorCode::Shape, "polynomial ring does not match the group");
  }
  if (v.size() != spec.dimension()) throw Error(ErrorCode::Shape, "point dimension does not match the group");
  if (std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); })) {
    throw Error(ErrorCode::Domain, "point must be nonzero");
  }
  if (!is_fixed_point(spec, v)) throw Error(ErrorCode::NotFixed, "point is not fixed by the group");
  if (f.is_zero()) throw Error(ErrorCode::VanishesAtPoint, "invariant vanishes at point");
  if (!f.is_homogeneous()) throw Error(ErrorCode::Inhomogeneous, "polynomial is not homogeneous");
  if (!is_invariant(f, spec)) throw Error(ErrorCode::NotInvariant, "polynomial is not invariant");
  const FieldElement value = evaluate(f, v);
  if (value.is_zero()) throw Error(ErrorCode::VanishesAtPoint, "invariant vanishes at point");

  const DegreeFactorization factorization = factor_p_power(f.total_degree(), p);
  const Matrix basis = extend_to_basis(v);
  std::vector<Polynomial> c = adapted_decomposition(f, basis, factorization.degree());
  const FieldElement c0 = c.front().coefficient(Monomial::one(spec.dimension()));
  if (!(c0 == value)) throw Error(ErrorCode::InternalConsistency, "c_0 differs from f(v)");

  c.resize(factorization.p_power + 1, Polynomial(p, spec.dimension()));
  const Polynomial adapted = assemble_reduced_invariant(c, factorization);
  Polynomial f_tilde = linear_substitute(adapted, mat_inv(basis));

  if (!f_tilde.is_homogeneous() || f_tilde.total_degree() != factorization.p_power) {
    throw Error(ErrorCode::InternalConsistency, "reduced invariant has the wrong degree");
  }
  if (!(evaluate(f_tilde, v) == FieldElement::one(p))) {
    throw Error(ErrorCode::InternalConsistency, "reduced invariant does not take the value 1 at the point");
  }
  if (!is_invariant(f_tilde, spec)) {
    throw Error(ErrorCode::InternalConsistency, "reduced polynomial is not invariant");
  }
  return ReductionResult{std::move(f_tilde), factorization, basis, std::move(c), c0};
}

}  // namespace invred
