#pragma once

#include <cstddef>
#include <vector>

#include "arrmi/rational.hpp"

namespace arrmi {

using RatVector = std::vector<Rat>;

// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector operator*(const RatVector& v) const;

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

/// Basis of the right kernel, itself in reduced row echelon form (leftmost
/// pivots, pivot entries 1). rank(M) + kernel size == M.cols().
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Reduced row echelon basis of the row space of the given vectors.
std::vector<RatVector> row_space_basis(const std::vector<RatVector>& rows, std::size_t cols);

}  // namespace arrmi
