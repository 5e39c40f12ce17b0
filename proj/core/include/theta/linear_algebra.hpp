#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "theta/rational.hpp"

namespace theta {

/// Sparse vector as (index, value) pairs sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Dense matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  [[nodiscard]] const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  [[nodiscard]] std::size_t rank() const;
  /// Nullspace basis: one vector per non-pivot column (in column order),
  /// scaled to coprime integers with first nonzero entry positive.
  [[nodiscard]] std::vector<std::vector<Rational>> kernel() const;
  /// Some x with A x = b, or nullopt when inconsistent. Free variables are 0.
  [[nodiscard]] std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Column-major sparse matrix. Row ids are arbitrary integers < rows().
class SparseColumnMatrix {
 public:
  explicit SparseColumnMatrix(std::size_t cols) : columns_(cols) {}

  void add(std::size_t row, std::size_t col, const Rational& value);
  void set_rows(std::size_t rows) { rows_ = rows; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return columns_.size(); }
  [[nodiscard]] const SparseVector& column(std::size_t c) const { return columns_[c]; }

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

/// Result of an exact kernel computation.
struct KernelResult {
  std::vector<SparseVector> basis;       ///< ordered by free column
  std::vector<std::size_t> pivot_cols;   ///< sorted
  std::size_t rank = 0;
};

/// Exact nullspace of a sparse matrix. Columns connected through shared
/// rows are eliminated together (fraction-free Gauss-Jordan on integers);
/// unrelated blocks are independent, so the output equals the reduced
/// row-echelon nullspace of the whole matrix. Vectors are coprime integer
/// vectors with the first nonzero entry positive.
KernelResult sparse_kernel(const SparseColumnMatrix& m);

}  // namespace theta
