#pragma once

// Finite matrix groups over GF(p) and their action on polynomials.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "invred/gfp.hpp"
#include "invred/matrix.hpp"
#include "invred/poly.hpp"

namespace invred {

/// A finite group G <= GL_n(p) given by generators, acting on V = GF(p)^n
/// by matrix-vector multiplication (generators act on column vectors).
class GroupSpec {
 public:
  /// Throws ErrorCode::Shape for an empty generator list or mismatched
  /// shapes and ErrorCode::Singular for a non-invertible generator.
  GroupSpec(Prime p, std::size_t n, std::vector<Matrix> generators);

  /// The trivial group on GF(p)^n, generated by the identity.
  static GroupSpec trivial(Prime p, std::size_t n);

  Prime prime() const noexcept { return prime_; }
  std::size_t dimension() const noexcept { return n_; }
  const std::vector<Matrix>& generators() const noexcept { return generators_; }
  const std::vector<Matrix>& generator_inverses() const noexcept { return inverses_; }

 private:
  Prime prime_;
  std::size_t n_;
  std::vector<Matrix> generators_;
  std::vector<Matrix> inverses_;
};

struct GroupElements {
  std::vector<Matrix> elements;  // identity first, then breadth-first order

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(const Matrix& g) const;
};

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// g(f) = f o g^{-1}: every x_i is replaced by row i of g^{-1}.
/// Satisfies act(g, act(h, f)) == act(g h, f).
Polynomial act(const Matrix& g, const Polynomial& f);

/// Same as act() when g^{-1} is already known.
Polynomial act_with_inverse(const Matrix& g_inverse, const Polynomial& f);

/// Closure of the generators under multiplication. Throws
/// ErrorCode::GroupTooLarge as soon as more than `cap` elements are found.
GroupElements enumerate_group(const GroupSpec& spec, std::size_t cap = kDefaultGroupCap);

/// Basis of V^G: the reduced nullspace of the stacked blocks (g_i - I).
std::vector<Vector> fixed_space(const GroupSpec& spec);

bool is_fixed_point(const GroupSpec& spec, const Vector& v);

/// Formal invariance under every generator, hence under all of G.
bool is_invariant(const Polynomial& f, const GroupSpec& spec);

/// Z_p x Z_p acting on V = <h_1..h_m, e_1..e_m> by the block matrices
/// [[I, 0], [I, I]] and [[I, 0], [J_m(lambda), I]], J_m(lambda) the lower
/// triangular Jordan block. Coordinates are ordered x_1..x_m, y_1..y_m.
/// Throws ErrorCode::Domain when m < 2.
GroupSpec example_action(Prime p, std::size_t m, const FieldElement& lambda);

/// The fixed point e_m of example_action (last standard basis vector).
Vector example_point(Prime p, std::size_t m);

}  // namespace invred
