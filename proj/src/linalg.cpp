#include "arrmi/linalg.hpp"

#include <utility>

#include "arrmi/error.hpp"

namespace arrmi {

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

std::vector<std::size_t> RatMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && sgn((*this)(sel, col)) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(sel, c), (*this)(row, c));
    const Rat inv = 1 / (*this)(row, col);
    for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || sgn((*this)(r, col)) == 0) continue;
      const Rat f = (*this)(r, col);
      for (std::size_t c = col; c < cols_; ++c)
        if (sgn((*this)(row, c)) != 0) (*this)(r, c) -= f * (*this)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RatMatrix::rank() const {
  RatMatrix copy = *this;
  return copy.rref().size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RatMatrix r = m;
  const auto pivots = r.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return row_space_basis(basis, m.cols());
}

std::vector<RatVector> row_space_basis(const std::vector<RatVector>& rows, std::size_t cols) {
  if (rows.empty()) return {};
  RatMatrix m = RatMatrix::from_rows(rows, cols);
  const auto pivots = m.rref();
  std::vector<RatVector> out;
  out.reserve(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    RatVector v(cols);
    for (std::size_t c = 0; c < cols; ++c) v[c] = m(i, c);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace arrmi
