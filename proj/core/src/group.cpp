#include "invred/group.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "entry_hash.hpp"
#include "invred/error.hpp"

namespace invred {

GroupSpec::GroupSpec(Prime p, std::size_t n, std::vector<Matrix> generators)
    : prime_(p), n_(n), generators_(std::move(generators)) {
  if (n_ == 0) throw Error(ErrorCode::Shape, "group dimension must be positive");
  if (generators_.empty()) throw Error(ErrorCode::Shape, "at least one generator is required");
  inverses_.reserve(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const Matrix& g = generators_[i];
    if (!(g.prime() == p) || g.rows() != n_ || g.cols() != n_) {
      throw Error(ErrorCode::Shape, "generator " + std::to_string(i) + " is not a " + std::to_string(n_) + "x" +
                                        std::to_string(n_) + " matrix over GF(" + std::to_string(p.value()) + ")");
    }
    try {
      inverses_.push_back(mat_inv(g));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Singular) throw;
      throw Error(ErrorCode::Singular, "generator " + std::to_string(i) + " is singular");
    }
  }
}

GroupSpec GroupSpec::trivial(Prime p, std::size_t n) { return GroupSpec(p, n, {Matrix::identity(p, n)}); }

bool GroupElements::contains(const Matrix& g) const {
  return std::find(elements.begin(), elements.end(), g) != elements.end();
}

Polynomial act_with_inverse(const Matrix& g_inverse, const Polynomial& f) {
  return linear_substitute(f, g_inverse);
}

Polynomial act(const Matrix& g, const Polynomial& f) { return act_with_inverse(mat_inv(g), f); }

GroupElements enumerate_group(const GroupSpec& spec, std::size_t cap) {
  if (cap == 0) throw Error(ErrorCode::Domain, "group enumeration cap must be positive");
  GroupElements out;
  std::unordered_set<std::vector<std::uint32_t>, detail::EntryHash> seen;
  std::deque<std::size_t> queue;

  auto insert = [&](Matrix g) {
    if (!seen.insert(g.data()).second) return;
    if (out.elements.size() == cap) {
      throw Error(ErrorCode::GroupTooLarge, "group has more than " + std::to_string(cap) + " elements");
    }
    queue.push_back(out.elements.size());
    out.elements.push_back(std::move(g));
  };

  insert(Matrix::identity(spec.prime(), spec.dimension()));
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    for (const auto& gen : spec.generators()) insert(mat_mul(out.elements[idx], gen));
  }
  return out;
}

std::vector<Vector> fixed_space(const GroupSpec& spec) {
  const std::size_t n = spec.dimension();
  const std::uint32_t p = spec.prime().value();
  RowReducer reducer(spec.prime(), n);
  for (const auto& g : spec.generators()) {
    for (std::size_t i = 0; i < n && !reducer.full_rank(); ++i) {
      std::vector<std::uint32_t> row(g.row(i).begin(), g.row(i).end());
      row[i] = mod::sub(row[i], 1, p);
      reducer.add_row(std::move(row));
    }
  }
  std::vector<Vector> basis;
  for (const auto& raw : reducer.kernel()) {
    Vector v;
    for (auto x : raw) v.push_back(FieldElement::from_residue(x, spec.prime()));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_fixed_point(const GroupSpec& spec, const Vector& v) {
  if (v.size() != spec.dimension()) throw Error(ErrorCode::Shape, "point dimension does not match the group");
  return std::all_of(spec.generators().begin(), spec.generators().end(),
                     [&](const Matrix& g) { return mat_vec(g, v) == v; });
}

bool is_invariant(const Polynomial& f, const GroupSpec& spec) {
  if (f.nvars() != spec.dimension() || !(f.prime() == spec.prime())) {
    throw Error(ErrorCode::Shape, "polynomial ring does not match the group");
  }
  return std::all_of(spec.generator_inverses().begin(), spec.generator_inverses().end(),
                     [&](const Matrix& ginv) { return act_with_inverse(ginv, f) == f; });
}

GroupSpec example_action(Prime p, std::size_t m, const FieldElement& lambda) {
  if (m < 2) throw Error(ErrorCode::Domain, "example action requires m >= 2, got m = " + std::to_string(m));
  if (!(lambda.modulus() == p)) throw Error(ErrorCode::Shape, "lambda must lie in GF(p)");
  const std::size_t n = 2 * m;
  Matrix g1 = Matrix::identity(p, n);
  Matrix g2 = Matrix::identity(p, n);
  for (std::size_t j = 0; j < m; ++j) {
    g1.raw(m + j, j) = 1;
    g2.raw(m + j, j) = lambda.residue();
    if (j > 0) g2.raw(m + j, j - 1) = 1;
  }
  return GroupSpec(p, n, {std::move(g1), std::move(g2)});
}

Vector example_point(Prime p, std::size_t m) {
  Vector v(2 * m, FieldElement::zero(p));
  v.back() = FieldElement::one(p);
  return v;
}

}  // namespace invred
