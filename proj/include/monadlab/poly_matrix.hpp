#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monadlab/linalg.hpp"
#include "monadlab/polynomial.hpp"

namespace monadlab {

/// Row-major matrix of polynomials over one ring. Shapes with zero rows or
/// columns are valid (a monad with a = 0 or c = 0 has one).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(const Ring& ring, std::size_t rows, std::size_t cols);
  static PolyMatrix from_rows(const Ring& ring, std::size_t cols, std::vector<std::vector<Polynomial>> rows);
  /// Constant matrix viewed as a matrix of degree-0 polynomials.
  static PolyMatrix constant(const Ring& ring, const DenseMatrix& m);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Polynomial> entries() const { return data_; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator*(const DenseMatrix& o) const;
  friend PolyMatrix operator*(const DenseMatrix& m, const PolyMatrix& p);
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  PolyMatrix transpose() const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

  bool is_zero() const;
  /// Common degree of all nonzero entries; kAnyDegree when all entries are
  /// zero; nullopt when entries are inhomogeneous or of mixed degrees.
  std::optional<int> entry_degree() const;

  DenseMatrix evaluate(std::span<const FieldElement> point) const;
  PolyMatrix select_columns(std::size_t first, std::size_t count) const;

  std::vector<std::vector<std::string>> to_strings(std::span<const std::string> names) const;

 private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> data_;
};

}  // namespace monadlab
