#include "ainf/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ainf {

std::vector<Scalar> RationalMatrix::column(int c) const {
  std::vector<Scalar> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("hstack: row counts differ");
  RationalMatrix out(rows_, cols_ + other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (int c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

RationalMatrix RationalMatrix::from_columns(int rows, const std::vector<std::vector<Scalar>>& columns) {
  RationalMatrix out(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < out.cols_; ++c) {
    if (static_cast<int>(columns[c].size()) != rows) throw std::invalid_argument("from_columns: wrong column length");
    for (int r = 0; r < rows; ++r) out(r, c) = columns[c][r];
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RationalMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int p = row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Scalar inv = 1 / m(row, c);
    for (int j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, c)) == 0) continue;
      const Scalar f = m(r, c);
      for (int j = c; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(RationalMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Scalar>> kernel(RationalMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ainf
