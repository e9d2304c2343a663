#include "monadlab/linalg.hpp"

#include "monadlab/errors.hpp"

namespace monadlab {

DenseMatrix::DenseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(field)) {}

DenseMatrix DenseMatrix::identity(Field field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(field);
  return m;
}

DenseMatrix DenseMatrix::from_ints(Field field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(field, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw StructuralError("ragged constant matrix");
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = FieldElement(field, static_cast<std::int64_t>(rows[r][c]));
  }
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (cols_ != o.rows_) throw StructuralError("constant matrix shapes do not compose");
  if (field_ != o.field_) throw StructuralError("constant matrices over different fields");
  DenseMatrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::scaled(const FieldElement& c) const {
  DenseMatrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

bool DenseMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<std::size_t> DenseMatrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && (*this)(sel, col).is_zero()) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(row, j));
    const FieldElement inv = (*this)(row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || (*this)(i, col).is_zero()) continue;
      const FieldElement f = (*this)(i, col);
      for (std::size_t j = col; j < cols_; ++j)
        if (!(*this)(row, j).is_zero()) (*this)(i, j) -= f * (*this)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t DenseMatrix::rank() const {
  DenseMatrix copy = *this;
  return copy.row_reduce().size();
}

std::vector<std::vector<FieldElement>> DenseMatrix::kernel() const {
  DenseMatrix r = *this;
  const auto pivots = r.row_reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(cols_, FieldElement::zero(field_));
    v[free] = FieldElement::one(field_);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<FieldElement>> DenseMatrix::solve(const std::vector<FieldElement>& rhs) const {
  if (rhs.size() != rows_) throw StructuralError("right-hand side length mismatch");
  DenseMatrix aug(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = rhs[i];
  }
  const auto pivots = aug.row_reduce();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<FieldElement> x(cols_, FieldElement::zero(field_));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
  return x;
}

}  // namespace monadlab
