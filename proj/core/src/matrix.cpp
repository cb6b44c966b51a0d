#include "invred/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "invred/error.hpp"

namespace invred {

namespace {

void require_same_field(Prime a, Prime b) {
  if (!(a == b)) throw Error(ErrorCode::Shape, "matrices over different prime fields");
}

// row[from..] -= factor * pivot[from..]
void axpy_sub(std::vector<std::uint32_t>& row, const std::vector<std::uint32_t>& pivot, std::uint32_t factor,
              std::size_t from, std::uint32_t p) {
  const std::uint64_t f = p - factor;
  const std::size_t n = row.size();
  for (std::size_t t = from; t < n; ++t) {
    if (pivot[t] != 0) row[t] = static_cast<std::uint32_t>((row[t] + f * pivot[t]) % p);
  }
}

}  // namespace

Matrix::Matrix(Prime p, std::size_t rows, std::size_t cols)
    : prime_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(Prime p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Prime p, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(p, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::Shape, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.raw(i, j) = mod::reduce(rows[i][j], p.value());
  }
  return m;
}

Matrix Matrix::from_columns(Prime p, const std::vector<Vector>& cols) {
  const std::size_t rows = cols.empty() ? 0 : cols.front().size();
  Matrix m(p, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorCode::Shape, "ragged matrix columns");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const FieldElement& value) {
  require_same_field(prime_, value.modulus());
  raw(i, j) = value.residue();
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a.prime(), b.prime());
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::Shape, "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                      " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const std::uint32_t p = a.prime().value();
  Matrix c(a.prime(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a.raw(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.raw(i, j) = static_cast<std::uint32_t>((c.raw(i, j) + aik * b.raw(k, j)) % p);
      }
    }
  }
  return c;
}

Matrix mat_inv(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::Shape, "only square matrices can be inverted");
  const std::size_t n = a.rows();
  const std::uint32_t p = a.prime().value();
  std::vector<std::vector<std::uint32_t>> aug(n, std::vector<std::uint32_t>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a.raw(i, j);
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::Singular, "matrix is singular");
    std::swap(aug[piv], aug[col]);
    const std::uint32_t s = mod::inv(aug[col][col], p);
    for (auto& x : aug[col]) x = mod::mul(x, s, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != col && aug[i][col] != 0) axpy_sub(aug[i], aug[col], aug[i][col], col, p);
    }
  }
  Matrix inv(a.prime(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.raw(i, j) = aug[i][n + j];
  }
  return inv;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.prime(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t.raw(j, i) = a.raw(i, j);
  }
  return t;
}

Vector mat_vec(const Matrix& a, const Vector& v) {
  if (v.size() != a.cols()) throw Error(ErrorCode::Shape, "vector length does not match matrix columns");
  const std::uint32_t p = a.prime().value();
  Vector out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint32_t acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      require_same_field(a.prime(), v[j].modulus());
      acc = mod::add(acc, mod::mul(a.raw(i, j), v[j].residue(), p), p);
    }
    out.push_back(FieldElement::from_residue(acc, a.prime()));
  }
  return out;
}

std::size_t rank(const Matrix& a) {
  RowReducer reducer(a.prime(), a.cols());
  for (std::size_t i = 0; i < a.rows() && !reducer.full_rank(); ++i) {
    auto r = a.row(i);
    reducer.add_row({r.begin(), r.end()});
  }
  return reducer.rank();
}

RowReducer::RowReducer(Prime p, std::size_t cols) : prime_(p), cols_(cols), row_of_column_(cols, -1) {}

bool RowReducer::add_row(std::vector<std::uint32_t> row) {
  if (row.size() != cols_) throw Error(ErrorCode::Shape, "row length does not match reducer width");
  const std::uint32_t p = prime_.value();
  std::size_t lead = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row[c] == 0) continue;
    const auto r = row_of_column_[c];
    if (r < 0) {
      if (lead == cols_) lead = c;
      continue;
    }
    axpy_sub(row, rows_[static_cast<std::size_t>(r)], row[c], c, p);
  }
  if (lead == cols_) return false;

  const std::uint32_t s = mod::inv(row[lead], p);
  for (std::size_t t = lead; t < cols_; ++t) row[t] = mod::mul(row[t], s, p);
  for (auto& other : rows_) {
    if (other[lead] != 0) axpy_sub(other, row, other[lead], lead, p);
  }
  row_of_column_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
  pivots_.push_back(lead);
  rows_.push_back(std::move(row));
  return true;
}

std::vector<std::size_t> RowReducer::pivot_columns() const {
  std::vector<std::size_t> cols = pivots_;
  std::sort(cols.begin(), cols.end());
  return cols;
}

std::vector<std::vector<std::uint32_t>> RowReducer::echelon_rows() const {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(rows_.size());
  for (std::size_t c : pivot_columns()) out.push_back(rows_[static_cast<std::size_t>(row_of_column_[c])]);
  return out;
}

std::vector<std::vector<std::uint32_t>> RowReducer::kernel() const {
  const std::uint32_t p = prime_.value();
  RowReducer canonical(prime_, cols_);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (row_of_column_[f] >= 0) continue;
    std::vector<std::uint32_t> v(cols_, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = mod::neg(rows_[r][f], p);
    canonical.add_row(std::move(v));
  }
  return canonical.echelon_rows();
}

std::vector<Vector> nullspace(const Matrix& a) {
  RowReducer reducer(a.prime(), a.cols());
  for (std::size_t i = 0; i < a.rows() && !reducer.full_rank(); ++i) {
    auto r = a.row(i);
    reducer.add_row({r.begin(), r.end()});
  }
  std::vector<Vector> basis;
  for (const auto& raw : reducer.kernel()) {
    Vector v;
    v.reserve(raw.size());
    for (auto x : raw) v.push_back(FieldElement::from_residue(x, a.prime()));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace invred
