#include "invred/invariants.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "entry_hash.hpp"
#include "invred/error.hpp"

namespace invred {

namespace {

using IndexMap = std::unordered_map<std::vector<std::uint32_t>, std::size_t, detail::EntryHash>;

IndexMap index_monomials(const std::vector<Monomial>& monomials) {
  IndexMap index;
  index.reserve(monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i].exponents(), i);
  return index;
}

void check_slice_size(std::size_t nvars, std::uint64_t d, const Limits& limits) {
  const std::size_t dim = slice_dimension(nvars, d);
  if (dim > limits.slice_dimension) {
    throw Error(ErrorCode::Resource, "degree-" + std::to_string(d) + " slice has dimension " +
                                         (dim == SIZE_MAX ? std::string("> SIZE_MAX") : std::to_string(dim)) +
                                         ", above the limit of " + std::to_string(limits.slice_dimension));
  }
}

// Given rho_{d-1}(g) for every g (as matrices indexed by `prev`), builds
// rho_d(g) on `next` using x_i * m' -> L_i * act(g, m'), where L_i is row i
// of g^{-1}.
std::vector<Matrix> lift_images(const std::vector<Matrix>& inverses, const std::vector<Monomial>& prev,
                                const std::vector<Matrix>& prev_images, const std::vector<Monomial>& next) {
  const std::size_t n = next.front().nvars();
  const IndexMap prev_index = index_monomials(prev);
  const IndexMap next_index = index_monomials(next);

  // up[t * n + k] = index of prev[t] * x_k in next
  std::vector<std::size_t> up(prev.size() * n);
  for (std::size_t t = 0; t < prev.size(); ++t) {
    std::vector<std::uint32_t> e = prev[t].exponents();
    for (std::size_t k = 0; k < n; ++k) {
      ++e[k];
      up[t * n + k] = next_index.at(e);
      --e[k];
    }
  }

  std::vector<Matrix> out;
  out.reserve(inverses.size());
  for (std::size_t gi = 0; gi < inverses.size(); ++gi) {
    const Matrix& ginv = inverses[gi];
    const Matrix& before = prev_images[gi];
    const std::uint32_t p = ginv.prime().value();
    Matrix after(ginv.prime(), next.size(), next.size());
    for (std::size_t j = 0; j < next.size(); ++j) {
      std::vector<std::uint32_t> e = next[j].exponents();
      const std::size_t i = static_cast<std::size_t>(std::find_if(e.begin(), e.end(), [](auto x) { return x != 0; }) -
                                                     e.begin());
      --e[i];
      const std::size_t src = prev_index.at(e);
      for (std::size_t t = 0; t < prev.size(); ++t) {
        const std::uint32_t c = before.raw(t, src);
        if (c == 0) continue;
        for (std::size_t k = 0; k < n; ++k) {
          const std::uint32_t l = ginv.raw(i, k);
          if (l == 0) continue;
          auto& cell = after.raw(up[t * n + k], j);
          cell = mod::add(cell, mod::mul(c, l, p), p);
        }
      }
    }
    out.push_back(std::move(after));
  }
  return out;
}

}  // namespace

Matrix induced_slice_matrix(const Matrix& g, std::uint64_t d, const Limits& limits) {
  if (!g.is_square()) throw Error(ErrorCode::Shape, "group element must be square");
  const std::size_t n = g.rows();
  check_slice_size(n, d, limits);
  const std::vector<Matrix> inverses{mat_inv(g)};
  std::vector<Monomial> monomials = monomial_basis(n, 0);
  std::vector<Matrix> images{Matrix::identity(g.prime(), 1)};
  for (std::uint64_t level = 1; level <= d; ++level) {
    std::vector<Monomial> next = monomial_basis(n, level);
    images = lift_images(inverses, monomials, images, next);
    monomials = std::move(next);
  }
  return images.front();
}

InvariantSlices::InvariantSlices(GroupSpec spec, Limits limits) : spec_(std::move(spec)), limits_(limits) {
  monomials_ = monomial_basis(spec_.dimension(), 0);
  images_.assign(spec_.generators().size(), Matrix::identity(spec_.prime(), 1));
}

void InvariantSlices::advance() {
  check_slice_size(spec_.dimension(), level_ + 1, limits_);
  std::vector<Monomial> next = monomial_basis(spec_.dimension(), level_ + 1);
  images_ = lift_images(spec_.generator_inverses(), monomials_, images_, next);
  monomials_ = std::move(next);
  ++level_;
}

const DegreeSliceBasis& InvariantSlices::basis(std::uint64_t d) {
  if (auto it = bases_.find(d); it != bases_.end()) return it->second;
  check_slice_size(spec_.dimension(), d, limits_);
  if (d < level_) {
    level_ = 0;
    monomials_ = monomial_basis(spec_.dimension(), 0);
    images_.assign(spec_.generators().size(), Matrix::identity(spec_.prime(), 1));
  }
  while (level_ < d) advance();

  const std::size_t dim = monomials_.size();
  const std::uint32_t p = spec_.prime().value();
  RowReducer reducer(spec_.prime(), dim);
  for (const Matrix& rho : images_) {
    for (std::size_t r = 0; r < dim && !reducer.full_rank(); ++r) {
      std::vector<std::uint32_t> row(rho.row(r).begin(), rho.row(r).end());
      row[r] = mod::sub(row[r], 1, p);
      reducer.add_row(std::move(row));
    }
  }

  DegreeSliceBasis slice;
  slice.degree = d;
  for (const auto& kernel_vector : reducer.kernel()) {
    Polynomial f(spec_.prime(), spec_.dimension());
    for (std::size_t j = 0; j < dim; ++j) {
      if (kernel_vector[j] != 0) f.add_term_raw(monomials_[j], kernel_vector[j]);
    }
    slice.basis.push_back(std::move(f));
  }
  return bases_.emplace(d, std::move(slice)).first->second;
}

DegreeSliceBasis invariant_basis(const GroupSpec& spec, std::uint64_t d, const Limits& limits) {
  InvariantSlices slices(spec, limits);
  return slices.basis(d);
}

namespace {

void check_point(const GroupSpec& spec, const Vector& v) {
  if (v.size() != spec.dimension()) {
    throw Error(ErrorCode::Shape, "point has " + std::to_string(v.size()) + " coordinates, expected " +
                                      std::to_string(spec.dimension()));
  }
  for (const auto& x : v) {
    if (!(x.modulus() == spec.prime())) throw Error(ErrorCode::Shape, "point coordinates from a different field");
  }
  if (std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); })) {
    throw Error(ErrorCode::Domain, "epsilon is undefined at the zero vector");
  }
}

}  // namespace

EpsilonResult epsilon(InvariantSlices& slices, const Vector& v, std::uint64_t bound) {
  check_point(slices.spec(), v);
  EpsilonResult result;
  result.searched_bound = bound;
  for (std::uint64_t d = 1; d <= bound; ++d) {
    const auto& slice = slices.basis(d);
    // basis is ordered by decreasing leading monomial; the tie-break wants
    // the smallest leading monomial, so scan from the back
    for (auto it = slice.basis.rbegin(); it != slice.basis.rend(); ++it) {
      if (!evaluate(*it, v).is_zero()) {
        result.value = d;
        result.witness = *it;
        return result;
      }
    }
  }
  return result;
}

EpsilonResult epsilon(const GroupSpec& spec, const Vector& v, std::optional<std::uint64_t> bound,
                      const Limits& limits) {
  check_point(spec, v);
  const std::uint64_t b = bound ? *bound : enumerate_group(spec, limits.group_cap).order();
  if (b == 0) throw Error(ErrorCode::Domain, "epsilon search bound must be positive");
  InvariantSlices slices(spec, limits);
  return epsilon(slices, v, b);
}

Polynomial orbit_norm(const GroupSpec& spec, const Polynomial& l, const Limits& limits) {
  if (l.nvars() != spec.dimension() || !(l.prime() == spec.prime())) {
    throw Error(ErrorCode::Shape, "linear form does not match the group");
  }
  if (l.is_zero() || !l.is_homogeneous() || l.total_degree() != 1) {
    throw Error(ErrorCode::Domain, "orbit norm needs a nonzero linear form");
  }
  const GroupElements group = enumerate_group(spec, limits.group_cap);
  Polynomial norm = Polynomial::constant(spec.prime(), spec.dimension(), 1);
  for (const auto& g : group.elements) norm = norm * act(g, l);
  return norm;
}

DeltaResult delta_over_fixed_points(const GroupSpec& spec, const Limits& limits) {
  DeltaResult result;
  const std::vector<Vector> fixed = fixed_space(spec);
  result.fixed_dimension = fixed.size();
  result.group_order = enumerate_group(spec, limits.group_cap).order();
  if (fixed.empty()) return result;

  // epsilon(c v) = epsilon(v), so one point per line suffices: coefficient
  // tuples whose first nonzero entry is 1
  const std::uint32_t p = spec.prime().value();
  const std::size_t k = fixed.size();
  long double lines = 0;
  for (std::size_t i = 0; i < k; ++i) lines = lines * p + 1;
  if (lines > static_cast<long double>(limits.fixed_points)) {
    throw Error(ErrorCode::Resource, "fixed space of dimension " + std::to_string(k) + " over GF(" +
                                         std::to_string(p) + ") has too many points to enumerate (limit " +
                                         std::to_string(limits.fixed_points) + ")");
  }

  InvariantSlices slices(spec, limits);
  const std::uint64_t bound = result.group_order;
  for (std::size_t lead = 0; lead < k; ++lead) {
    // coefficients: zeros before lead, 1 at lead, anything after
    const std::size_t tail = k - lead - 1;
    std::vector<std::uint32_t> coeffs(tail, 0);
    while (true) {
      Vector v(spec.dimension(), FieldElement::zero(spec.prime()));
      for (std::size_t i = 0; i < spec.dimension(); ++i) {
        std::uint32_t acc = fixed[lead][i].residue();
        for (std::size_t t = 0; t < tail; ++t) {
          acc = mod::add(acc, mod::mul(coeffs[t], fixed[lead + 1 + t][i].residue(), p), p);
        }
        v[i] = FieldElement::from_residue(acc, spec.prime());
      }
      const EpsilonResult eps = epsilon(slices, v, bound);
      if (!eps.finite()) {
        throw Error(ErrorCode::InternalConsistency,
                    "no invariant of degree <= |G| separates a nonzero fixed point from zero");
      }
      ++result.points_examined;
      if (*eps.value > result.value) {
        result.value = *eps.value;
        result.maximizer = v;
      }
      std::size_t t = 0;
      while (t < tail && ++coeffs[t] == p) coeffs[t++] = 0;
      if (t == tail) break;
    }
  }
  return result;
}

}  // namespace invred
