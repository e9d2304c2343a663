#include "monadlab/chern.hpp"

#include "monadlab/errors.hpp"

namespace monadlab {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw ArgumentError("series coefficient overflows 64 bits");
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw ArgumentError("series coefficient overflows 64 bits");
  return r;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ArgumentError("a truncated series needs at least the constant term");
}

TruncatedSeries TruncatedSeries::one(int n) {
  if (n < 0) throw ArgumentError("truncation order must be nonnegative");
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  if (order() != o.order()) throw StructuralError("series truncated at different orders");
  std::vector<std::int64_t> r(coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; i + j < coeffs_.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
  return TruncatedSeries(std::move(r));
}

TruncatedSeries TruncatedSeries::inverse() const {
  const std::int64_t u = coeffs_[0];
  if (u != 1 && u != -1) throw ArgumentError("only series with constant term +-1 are invertible over the integers");
  std::vector<std::int64_t> r(coeffs_.size(), 0);
  r[0] = u;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    std::int64_t s = 0;
    for (std::size_t i = 1; i <= k; ++i) s = checked_add(s, checked_mul(coeffs_[i], r[k - i]));
    r[k] = checked_mul(-s, u);
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries TruncatedSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  TruncatedSeries r = one(order());
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

TruncatedSeries quotient_series(int c, int n) {
  if (c < 0 || n < 0) throw ArgumentError("quotient_series needs c, n >= 0");
  std::vector<std::int64_t> base(static_cast<std::size_t>(n) + 1, 0);
  base[0] = 1;
  if (n >= 2) base[2] = -1;
  return TruncatedSeries(std::move(base)).pow(c);
}

TruncatedSeries chern_series(int c, int n) { return quotient_series(c, n).inverse(); }

LowRankVerdict low_rank_shape(int a, int b, int c, int n) {
  if (a != c) return {false, "a = " + std::to_string(a) + " differs from c = " + std::to_string(c)};
  if (b != 2 * c + n - 1)
    return {false, "b = " + std::to_string(b) + " differs from 2c + n - 1 = " + std::to_string(2 * c + n - 1)};
  if (n % 2 == 0) {
    const auto series = chern_series(c, n);
    return {false, "n = " + std::to_string(n) + " is even: c_" + std::to_string(n) + "(E) = " +
                       std::to_string(series[n]) + " l^" + std::to_string(n) + " but rank n - 1 forces c_n = 0"};
  }
  return {true, "rank " + std::to_string(n - 1) + " = 2k with n = 2k + 1 odd"};
}

}  // namespace monadlab
