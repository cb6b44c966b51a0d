#pragma once

// Random small groups with nonzero fixed points, and random separating
// invariants on them. Used by the selfcheck command and the property tests.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "invred/group.hpp"
#include "invred/invariants.hpp"
#include "invred/reduction.hpp"

namespace invred {

struct SampleOptions {
  std::vector<std::uint32_t> primes{2, 3};
  std::size_t max_dimension = 3;
  std::size_t max_generators = 2;
  std::size_t max_order = 9;
  // degrees p^r d of the sampled invariants
  unsigned max_r = 2;
  std::vector<std::uint64_t> cofactors{1, 3, 5};
  std::uint64_t max_degree = 45;
};

struct SampledGroup {
  GroupSpec spec;
  std::size_t order = 0;
  std::vector<Vector> fixed_basis;  // never empty
};

/// Generators are drawn from the stabiliser of e_0 (random, or transvections
/// fixing e_0) and then conjugated by a random invertible matrix, so V^G is
/// never zero. Retries until |G| <= max_order.
SampledGroup sample_group(std::mt19937_64& rng, const SampleOptions& options);

/// Uniformly random nonzero vector of V^G.
Vector sample_fixed_point(std::mt19937_64& rng, const SampledGroup& group);

struct TheoremTrial {
  GroupSpec spec;
  std::size_t order = 0;
  Vector point;
  std::uint64_t epsilon = 0;  // epsilon(G, point)
  Polynomial invariant;       // homogeneous, invariant, nonzero at point
  DegreeFactorization factorization;
};

/// Builds f as a sum of products of invariant-basis combinations with total
/// degree N = p^r d, where N is a multiple of epsilon(G, v) within the
/// options. Returns nullopt when no admissible N exists for the draw.
std::optional<TheoremTrial> sample_theorem_trial(std::mt19937_64& rng, const SampleOptions& options);

}  // namespace invred
