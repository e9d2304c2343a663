#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monadlab {

/// Power series in u = l t truncated past t^n, with exact integer coefficients.
/// Arithmetic throws ArgumentError on int64 overflow.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<std::int64_t> coeffs);
  static TruncatedSeries one(int n);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  TruncatedSeries operator*(const TruncatedSeries& o) const;
  /// Requires a unit constant term (+1 or -1).
  TruncatedSeries inverse() const;
  TruncatedSeries pow(int e) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// (1 - l^2 t^2)^c truncated at t^n.
TruncatedSeries quotient_series(int c, int n);

/// Chern series of the cohomology of a monad of type (c, 2c + n - 1, c):
/// (1 - l^2 t^2)^{-c} up to t^n, computed by series inversion.
TruncatedSeries chern_series(int c, int n);

struct LowRankVerdict {
  bool admissible = false;
  std::string reason;
};

/// Whether a monad of type (a, b, c) on an n-dimensional smooth variety can have
/// a bundle of rank below n as cohomology: a = c, b = 2c + n - 1 and n odd.
LowRankVerdict low_rank_shape(int a, int b, int c, int n);

}  // namespace monadlab
