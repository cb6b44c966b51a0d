#pragma once

// Degree reduction for invariants separating a fixed point from zero.
//
// Let v be a nonzero fixed point and f a homogeneous invariant of degree
// N = p^r d, p not dividing d, with f(v) != 0. Completing v to a basis
// v = v0, v1, ..., vn and writing f in the dual coordinates x0, ..., xn as
//
//     f = sum_{i=0}^{N} x0^{N-i} c_i,   c_i in k[x1..xn]_i,  c_0 = f(v),
//
// the polynomial
//
//     f~ = x0^{p^r} + 1/(d c_0) sum_{i=1}^{p^r} x0^{p^r-i} c_i
//
// is again invariant, homogeneous of degree p^r, and f~(v) = 1. The map
// f -> f~ is linear on the degree-N slice and commutes with the action
// because C(p^r d - k, j) = C(p^r - k, j) mod p for 1 <= k <= p^r and
// j <= p^r - k (see lemma_congruence_holds).

#include <cstdint>
#include <span>
#include <vector>

#include "invred/gfp.hpp"
#include "invred/group.hpp"
#include "invred/matrix.hpp"
#include "invred/poly.hpp"

namespace invred {

struct DegreeFactorization {
  unsigned r = 0;
  std::uint64_t d = 1;        // coprime to p
  std::uint64_t p_power = 1;  // p^r

  std::uint64_t degree() const noexcept { return p_power * d; }
  friend bool operator==(const DegreeFactorization&, const DegreeFactorization&) = default;
};

/// The unique (r, d) with n = p^r d and p not dividing d. Throws
/// ErrorCode::Domain for n == 0.
DegreeFactorization factor_p_power(std::uint64_t n, Prime p);

/// Invertible matrix whose first column is v. The remaining columns are the
/// standard unit vectors e_0, e_1, ... in index order, each kept only if it
/// enlarges the span so far. Throws ErrorCode::Domain for v = 0.
Matrix extend_to_basis(const Vector& v);

/// Rewrites f in the coordinates dual to the columns of `basis` (so x0 is
/// dual to the first column) and splits it by powers of x0: returns
/// c_0..c_N with f' = sum x0^{N-i} c_i, where each c_i is free of x0 and
/// homogeneous of degree i. Throws ErrorCode::Inhomogeneous unless f is
/// homogeneous of degree N.
std::vector<Polynomial> adapted_decomposition(const Polynomial& f, const Matrix& basis, std::uint64_t degree);

/// Builds x0^{p^r} + 1/(d c_0) sum_{i=1}^{p^r} x0^{p^r-i} c_i in adapted
/// coordinates. Only c_0..c_{p^r} are read; missing entries count as zero.
Polynomial assemble_reduced_invariant(std::span<const Polynomial> c, const DegreeFactorization& factorization);

struct ReductionResult {
  Polynomial f_tilde;                 // original coordinates
  DegreeFactorization factorization;  // of deg f
  Matrix basis_change;                // columns: v, then the completion
  std::vector<Polynomial> c_list;     // c_0..c_{p^r}, adapted coordinates, before normalisation
  FieldElement normalization;         // c_0 = f(v)
};

/// Runs the full construction and re-verifies the result (invariance,
/// degree p^r, value 1 at v). Precondition failures raise NotFixed,
/// NotInvariant, VanishesAtPoint, Inhomogeneous or Domain; a failed
/// re-verification raises InternalConsistency.
ReductionResult reduce_degree(const GroupSpec& spec, const Polynomial& f, const Vector& v);

}  // namespace invred
