#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "monadlab/linalg.hpp"
#include "monadlab/monads.hpp"

namespace monadlab {

struct DimVector {
  int a = 0, b = 0, c = 0;

  friend auto operator<=>(const DimVector&, const DimVector&) = default;
  std::string to_string() const;
};

struct LambdaWeight {
  int l1 = 0, l2 = 0, l3 = 0;

  long long pair(const DimVector& d) const { return 1LL * l1 * d.a + 1LL * l2 * d.b + 1LL * l3 * d.c; }
  friend auto operator<=>(const LambdaWeight&, const LambdaWeight&) = default;
  std::string to_string() const;
};

/// Representation C^a -> C^b -> C^c of the three-vertex quiver with one arrow
/// per basis form on each side: A[i] is b x a and B[j] is c x b.
struct QuiverRep {
  DimVector dims;
  Field field;
  std::vector<DenseMatrix> A, B;

  /// Shapes agree with dims and both sides have the same arrow count.
  void validate() const;
};

/// Coefficient matrices with A = sum_i A_i basis_i and B = sum_j B_j basis_j.
/// An entry that is not a combination of the basis is retried modulo the
/// variety; if that fails too, ExtractionError.
QuiverRep monad_to_rep(const MonadSpec& m, std::span<const Polynomial> basis);

/// Reassembles sum_i M_i basis_i.
PolyMatrix assemble(std::span<const DenseMatrix> coeffs, std::span<const Polynomial> basis);

struct RelationResidual {
  std::size_t i, j;
  DenseMatrix value;  // B_i A_j + B_j A_i
};

struct RelationCheck {
  bool holds = true;
  std::vector<RelationResidual> residuals;  // only the nonzero ones, i <= j
};

RelationCheck check_relation(const QuiverRep& r);

/// Same representation over GF(2). GF(p) entries are lifted to (-p/2, p/2];
/// rational entries need odd denominators.
QuiverRep reduce_mod2(const QuiverRep& r);

/// Largest middle dimension the subrepresentation enumeration accepts.
inline constexpr int kMaxEnumerationDim = 8;

/// Dimension vectors of all subrepresentations (U1, U2, U3) of a GF(2)
/// representation, sorted. Refuses when b exceeds kMaxEnumerationDim.
std::set<DimVector> enumerate_subreps(const QuiverRep& r);

struct KingVerdict {
  bool semistable = false;
  bool stable = false;
  /// First subdimension (in sorted order) pairing negatively, or d itself
  /// when lambda does not pair to zero with d.
  std::optional<DimVector> violator;
  /// First proper nonzero subdimension pairing to zero.
  std::optional<DimVector> zero_pairing;
};

/// subdims must contain (0,0,0) and d.
KingVerdict king_semistable(const DimVector& d, const LambdaWeight& lambda, const std::set<DimVector>& subdims);

/// Lexicographically smallest nonzero weight in [-bound, bound]^3 making d
/// semistable. The zero weight is skipped because it certifies everything.
std::optional<LambdaWeight> find_lambda(const DimVector& d, const std::set<DimVector>& subdims, int bound);

/// Named subdimension sets. "paper-c1-k<k>": the hand analysis for (1, 2k+2, 1).
std::set<DimVector> subdims_preset(const std::string& name);

}  // namespace monadlab
