#include "invred/sampling.hpp"

#include <algorithm>

#include "invred/error.hpp"

namespace invred {

namespace {

std::uint32_t uniform(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

Matrix random_invertible(std::mt19937_64& rng, Prime p, std::size_t n) {
  while (true) {
    Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.raw(i, j) = uniform(rng, 0, p.value() - 1);
    }
    if (rank(m) == n) return m;
  }
}

// An invertible matrix with first column e_0.
Matrix random_stabilizer(std::mt19937_64& rng, Prime p, std::size_t n) {
  while (true) {
    Matrix m(p, n, n);
    m.raw(0, 0) = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 1; j < n; ++j) m.raw(i, j) = uniform(rng, 0, p.value() - 1);
    }
    if (rank(m) == n) return m;
  }
}

// I + u w^T with w_0 = 0 and w.u = 0: a transvection (or the identity) fixing e_0.
Matrix random_transvection(std::mt19937_64& rng, Prime p, std::size_t n) {
  const std::uint32_t q = p.value();
  while (true) {
    std::vector<std::uint32_t> u(n), w(n, 0);
    for (auto& x : u) x = uniform(rng, 0, q - 1);
    for (std::size_t j = 1; j < n; ++j) w[j] = uniform(rng, 0, q - 1);
    std::uint32_t dot = 0;
    for (std::size_t j = 0; j < n; ++j) dot = mod::add(dot, mod::mul(u[j], w[j], q), q);
    if (dot != 0) continue;
    Matrix m = Matrix::identity(p, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.raw(i, j) = mod::add(m.raw(i, j), mod::mul(u[i], w[j], q), q);
    }
    return m;
  }
}

Polynomial random_combination(std::mt19937_64& rng, const DegreeSliceBasis& slice, Prime p, std::size_t n) {
  Polynomial f(p, n);
  for (const auto& b : slice.basis) {
    f += b * FieldElement::from_residue(uniform(rng, 0, p.value() - 1), p);
  }
  return f;
}

}  // namespace

SampledGroup sample_group(std::mt19937_64& rng, const SampleOptions& options) {
  if (options.primes.empty() || options.max_dimension == 0 || options.max_generators == 0) {
    throw Error(ErrorCode::Domain, "empty sampling options");
  }
  while (true) {
    const Prime p(options.primes[uniform(rng, 0, static_cast<std::uint32_t>(options.primes.size() - 1))]);
    const std::size_t n = uniform(rng, 1, static_cast<std::uint32_t>(options.max_dimension));
    const std::size_t count = uniform(rng, 1, static_cast<std::uint32_t>(options.max_generators));
    const Matrix conj = random_invertible(rng, p, n);
    const Matrix conj_inv = mat_inv(conj);
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < count; ++i) {
      Matrix g = uniform(rng, 0, 1) ? random_transvection(rng, p, n) : random_stabilizer(rng, p, n);
      gens.push_back(mat_mul(mat_mul(conj, g), conj_inv));
    }
    GroupSpec spec(p, n, std::move(gens));
    try {
      const std::size_t order = enumerate_group(spec, options.max_order).order();
      std::vector<Vector> fixed = fixed_space(spec);
      if (fixed.empty()) throw Error(ErrorCode::InternalConsistency, "sampled group has no fixed points");
      return SampledGroup{std::move(spec), order, std::move(fixed)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GroupTooLarge) throw;
    }
  }
}

Vector sample_fixed_point(std::mt19937_64& rng, const SampledGroup& group) {
  const Prime p = group.spec.prime();
  while (true) {
    Vector v(group.spec.dimension(), FieldElement::zero(p));
    for (const auto& b : group.fixed_basis) {
      const FieldElement c = FieldElement::from_residue(uniform(rng, 0, p.value() - 1), p);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
    }
    if (std::any_of(v.begin(), v.end(), [](const FieldElement& x) { return !x.is_zero(); })) return v;
  }
}

std::optional<TheoremTrial> sample_theorem_trial(std::mt19937_64& rng, const SampleOptions& options) {
  SampledGroup group = sample_group(rng, options);
  const Prime p = group.spec.prime();
  const std::size_t n = group.spec.dimension();
  const Vector v = sample_fixed_point(rng, group);

  InvariantSlices slices(group.spec);
  const EpsilonResult eps = epsilon(slices, v, group.order);
  if (!eps.finite()) throw Error(ErrorCode::InternalConsistency, "fixed point not separated within |G|");
  const std::uint64_t e = *eps.value;

  std::vector<std::uint64_t> degrees;
  for (unsigned r = 0; r <= options.max_r; ++r) {
    const std::uint64_t pr = checked_power(p.value(), r);
    for (std::uint64_t d : options.cofactors) {
      if (d % p.value() == 0) continue;
      const std::uint64_t N = pr * d;
      if (N % e == 0 && N <= options.max_degree) degrees.push_back(N);
    }
  }
  if (degrees.empty()) return std::nullopt;
  const std::uint64_t N = degrees[uniform(rng, 0, static_cast<std::uint32_t>(degrees.size() - 1))];
  const DegreeSliceBasis& slice = slices.basis(e);

  Polynomial f(p, n);
  for (int attempt = 0; attempt < 64 && evaluate(f, v).is_zero(); ++attempt) {
    Polynomial separating = Polynomial::constant(p, n, 1);
    for (std::uint64_t k = 0; k < N / e; ++k) {
      Polynomial s(p, n);
      while (evaluate(s, v).is_zero()) s = random_combination(rng, slice, p, n);
      separating = separating * s;
    }
    f = separating;
    if (uniform(rng, 0, 1)) {
      Polynomial other = Polynomial::constant(p, n, 1);
      for (std::uint64_t k = 0; k < N / e; ++k) other = other * random_combination(rng, slice, p, n);
      f += other;
    }
  }
  if (evaluate(f, v).is_zero()) return std::nullopt;
  f = f * FieldElement::from_residue(uniform(rng, 1, p.value() - 1), p);

  return TheoremTrial{std::move(group.spec), group.order, v, e, std::move(f), factor_p_power(N, p)};
}

}  // namespace invred
