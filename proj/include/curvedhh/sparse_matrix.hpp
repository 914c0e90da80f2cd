#ifndef CURVEDHH_SPARSE_MATRIX_HPP
#define CURVEDHH_SPARSE_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "curvedhh/scalar.hpp"

namespace curvedhh {

struct MatrixEntry {
  std::uint32_t row;
  std::uint32_t col;
  Scalar value;
};

/*
 * Immutable sparse matrix over a single field.  Entries are kept sorted
 * row-major with no duplicates and no stored zeros.  A matrix with r rows and
 * c columns represents a linear map K^c -> K^r.
 */
class SparseMatrix {
 public:
  SparseMatrix() : field_(Field::rationals()) {}
  SparseMatrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {}

  // Duplicate (row, col) entries are summed; zeros are dropped.  Entries from
  // a different field raise ConfigurationError.
  static SparseMatrix from_entries(Field f, std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);
  static SparseMatrix identity(Field f, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  const std::vector<MatrixEntry>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  Scalar at(std::size_t r, std::size_t c) const;

  SparseMatrix transpose() const;
  // Matrix product (*this) * rhs, i.e. the composite map "apply rhs, then this".
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  SparseMatrix operator-() const;
  SparseMatrix submatrix(std::span<const std::uint32_t> rows, std::span<const std::uint32_t> cols) const;

  // [[top_left, top_right], [bottom_left, bottom_right]]; shapes must agree.
  static SparseMatrix block(const SparseMatrix& top_left, const SparseMatrix& top_right,
                            const SparseMatrix& bottom_left, const SparseMatrix& bottom_right);

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

// Exact rank over the matrix's field by sparse column elimination.  Columns
// are reduced in index order, each pivoting on its smallest surviving row.
std::size_t rank(const SparseMatrix& m);

}  // namespace curvedhh

#endif  // CURVEDHH_SPARSE_MATRIX_HPP
