#pragma once

// Dense matrices over GF(p) and exact Gaussian elimination.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "invred/gfp.hpp"

namespace invred {

using Vector = std::vector<FieldElement>;

/// Row-major dense matrix with entries stored as residues mod p.
class Matrix {
 public:
  Matrix(Prime p, std::size_t rows, std::size_t cols);

  static Matrix identity(Prime p, std::size_t n);
  /// Entries are reduced mod p; rows must all have the same length.
  static Matrix from_rows(Prime p, const std::vector<std::vector<std::int64_t>>& rows);
  /// Matrix whose j-th column is cols[j].
  static Matrix from_columns(Prime p, const std::vector<Vector>& cols);

  Prime prime() const noexcept { return prime_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  FieldElement at(std::size_t i, std::size_t j) const {
    return FieldElement::from_residue(raw(i, j), prime_);
  }
  void set(std::size_t i, std::size_t j, const FieldElement& value);

  std::uint32_t raw(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  std::uint32_t& raw(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

  std::span<const std::uint32_t> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  Vector column(std::size_t j) const;
  const std::vector<std::uint32_t>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Prime prime_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Gauss-Jordan inverse; throws ErrorCode::Singular.
Matrix mat_inv(const Matrix& a);
Matrix transpose(const Matrix& a);
Vector mat_vec(const Matrix& a, const Vector& v);
std::size_t rank(const Matrix& a);

/// Incremental row reduction. Rows are kept fully reduced (each pivot row
/// is zero in every other pivot column and starts at its pivot with a 1),
/// so feeding rows one at a time yields the reduced row echelon form of
/// the stacked input without ever materialising it.
class RowReducer {
 public:
  RowReducer(Prime p, std::size_t cols);

  /// Reduces `row` against the current pivots and keeps it if it is new.
  /// Returns true when the rank grew.
  bool add_row(std::vector<std::uint32_t> row);

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full_rank() const noexcept { return rows_.size() == cols_; }

  /// Pivot rows ordered by pivot column.
  std::vector<std::vector<std::uint32_t>> echelon_rows() const;
  /// Pivot column of each row returned by echelon_rows().
  std::vector<std::size_t> pivot_columns() const;

  /// Reduced row echelon basis of the right kernel: one vector per free
  /// column, ordered by leading (smallest nonzero) index, leading entry 1.
  std::vector<std::vector<std::uint32_t>> kernel() const;

 private:
  Prime prime_;
  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> row_of_column_;
};

/// Canonical reduced basis of {x : a x = 0}.
std::vector<Vector> nullspace(const Matrix& a);

}  // namespace invred
