#include "monadlab/poly_matrix.hpp"

#include "monadlab/errors.hpp"

namespace monadlab {

PolyMatrix::PolyMatrix(const Ring& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring)) {}

PolyMatrix PolyMatrix::from_rows(const Ring& ring, std::size_t cols, std::vector<std::vector<Polynomial>> rows) {
  PolyMatrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw StructuralError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(rows[r][c].ring() == ring)) throw StructuralError("matrix entry from another ring");
      m(r, c) = std::move(rows[r][c]);
    }
  }
  return m;
}

PolyMatrix PolyMatrix::constant(const Ring& ring, const DenseMatrix& m) {
  PolyMatrix p(ring, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) p(r, c) = Polynomial::constant(ring, m(r, c));
  return p;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw StructuralError("matrix shapes " + std::to_string(rows_) + "x" + std::to_string(cols_) + " and " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_) + " do not compose");
  if (!(ring_ == o.ring_)) throw StructuralError("matrices over different rings");
  PolyMatrix r(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Polynomial acc(ring_);
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& a = (*this)(i, k);
        const auto& b = o(k, j);
        if (!a.is_zero() && !b.is_zero()) acc += a * b;
      }
      r(i, j) = std::move(acc);
    }
  return r;
}

PolyMatrix PolyMatrix::operator*(const DenseMatrix& o) const {
  if (cols_ != o.rows()) throw StructuralError("matrix shapes do not compose");
  PolyMatrix r(ring_, rows_, o.cols());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols(); ++j) {
      Polynomial acc(ring_);
      for (std::size_t k = 0; k < cols_; ++k)
        if (!o(k, j).is_zero()) acc += (*this)(i, k).scaled(o(k, j));
      r(i, j) = std::move(acc);
    }
  return r;
}

PolyMatrix operator*(const DenseMatrix& m, const PolyMatrix& p) {
  if (m.cols() != p.rows_) throw StructuralError("matrix shapes do not compose");
  PolyMatrix r(p.ring_, m.rows(), p.cols_);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < p.cols_; ++j) {
      Polynomial acc(p.ring_);
      for (std::size_t k = 0; k < m.cols(); ++k)
        if (!m(i, k).is_zero()) acc += p(k, j).scaled(m(i, k));
      r(i, j) = std::move(acc);
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("matrix shapes differ");
  PolyMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const { return *this + (-o); }

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r = *this;
  for (auto& p : r.data_) p = -p;
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

std::optional<int> PolyMatrix::entry_degree() const {
  int degree = kAnyDegree;
  for (const auto& p : data_) {
    const auto d = homogeneous_degree(p);
    if (!d) return std::nullopt;
    if (*d == kAnyDegree) continue;
    if (degree != kAnyDegree && degree != *d) return std::nullopt;
    degree = *d;
  }
  return degree;
}

DenseMatrix PolyMatrix::evaluate(std::span<const FieldElement> point) const {
  DenseMatrix m(ring_.field, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
  return m;
}

PolyMatrix PolyMatrix::select_columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw ArgumentError("column range out of bounds");
  PolyMatrix r(ring_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
  return r;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings(std::span<const std::string> names) const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string(names));
  return out;
}

}  // namespace monadlab
