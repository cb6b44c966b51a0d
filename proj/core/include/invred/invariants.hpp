#pragma once

// Invariants of bounded degree, separating degrees epsilon(G, v) and their
// maximum over fixed points.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "invred/group.hpp"
#include "invred/matrix.hpp"
#include "invred/poly.hpp"

namespace invred {

struct Limits {
  /// Largest degree slice (number of monomials) that will be materialised.
  std::size_t slice_dimension = 20'000;
  std::size_t group_cap = kDefaultGroupCap;
  /// Largest number of projective fixed points delta will visit.
  std::size_t fixed_points = 1'000'000;
};

/// Basis of k[V]_d^G in reduced echelon form with respect to graded-lex
/// coordinates: leading monomials are distinct, ordered largest first, and
/// each leading coefficient is 1.
struct DegreeSliceBasis {
  std::uint64_t degree = 0;
  std::vector<Polynomial> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
};

struct EpsilonResult {
  std::optional<std::uint64_t> value;  // empty: nothing found up to searched_bound
  std::optional<Polynomial> witness;
  std::uint64_t searched_bound = 0;

  bool finite() const noexcept { return value.has_value(); }
};

struct DeltaResult {
  std::uint64_t value = 0;
  std::size_t group_order = 0;
  std::size_t fixed_dimension = 0;
  std::size_t points_examined = 0;  // one representative per line through 0
  std::optional<Vector> maximizer;
};

/// Matrix of f -> act(g, f) on k[V]_d in the coordinates of monomial_basis(n, d):
/// column j holds the coordinates of act(g, m_j).
Matrix induced_slice_matrix(const Matrix& g, std::uint64_t d, const Limits& limits = {});

/// Lazily computed invariant slices of one group. Slices are built degree by
/// degree, reusing the action on the previous slice, so scanning d = 1, 2, ...
/// costs one pass per degree. Not thread-safe; use one instance per thread.
class InvariantSlices {
 public:
  explicit InvariantSlices(GroupSpec spec, Limits limits = {});

  /// Throws ErrorCode::Resource when the slice exceeds limits.slice_dimension.
  const DegreeSliceBasis& basis(std::uint64_t d);

  const GroupSpec& spec() const noexcept { return spec_; }

 private:
  void advance();

  GroupSpec spec_;
  Limits limits_;
  std::uint64_t level_ = 0;
  std::vector<Monomial> monomials_;
  std::vector<Matrix> images_;  // rho_level(g_i), one per generator
  std::map<std::uint64_t, DegreeSliceBasis> bases_;
};

DegreeSliceBasis invariant_basis(const GroupSpec& spec, std::uint64_t d, const Limits& limits = {});

/// Least d in 1..bound with an invariant of degree d nonzero at v. Without a
/// bound the group is enumerated and bound = |G|, which is exact for fixed
/// points. Throws ErrorCode::Domain for v = 0.
EpsilonResult epsilon(const GroupSpec& spec, const Vector& v, std::optional<std::uint64_t> bound = std::nullopt,
                      const Limits& limits = {});

/// Same search against a shared slice cache.
EpsilonResult epsilon(InvariantSlices& slices, const Vector& v, std::uint64_t bound);

/// prod_{g in G} act(g, l) for a linear form l: an invariant of degree |G|
/// with value l(v)^|G| at every fixed point v.
Polynomial orbit_norm(const GroupSpec& spec, const Polynomial& l, const Limits& limits = {});

/// max epsilon(G, v) over nonzero v in V^G, 0 when V^G = 0.
DeltaResult delta_over_fixed_points(const GroupSpec& spec, const Limits& limits = {});

}  // namespace invred
