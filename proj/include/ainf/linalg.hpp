#pragma once

#include <vector>

#include "ainf/scalar.hpp"

namespace ainf {

/// Dense rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<Scalar> column(int c) const;
  /// Columns of this followed by the columns of other; row counts must agree.
  RationalMatrix hstack(const RationalMatrix& other) const;
  static RationalMatrix from_columns(int rows, const std::vector<std::vector<Scalar>>& columns);

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  bool is_zero() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

int rank(RationalMatrix m);
/// Basis of the null space, one vector per free column.
std::vector<std::vector<Scalar>> kernel(RationalMatrix m);

}  // namespace ainf
