#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monadlab/field.hpp"

namespace monadlab {

/// Dense row-major matrix of field constants.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(Field field, std::size_t rows, std::size_t cols);
  static DenseMatrix identity(Field field, std::size_t n);
  static DenseMatrix from_ints(Field field, const std::vector<std::vector<long long>>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix transpose() const;
  DenseMatrix scaled(const FieldElement& c) const;
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) = default;
  bool is_zero() const;

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> row_reduce();
  std::size_t rank() const;
  /// Basis of {v : M v = 0}.
  std::vector<std::vector<FieldElement>> kernel() const;
  /// Some v with M v = rhs, if one exists.
  std::optional<std::vector<FieldElement>> solve(const std::vector<FieldElement>& rhs) const;

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> data_;
};

}  // namespace monadlab
