#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monadlab/poly_matrix.hpp"
#include "monadlab/varieties.hpp"

namespace monadlab {

/// 0 -> (L^v)^a -A-> O^b -B-> L^c -> 0 on a variety. A is b x a, B is c x b,
/// and every entry is a form of degree `degree` (or zero).
struct MonadSpec {
  ProjectiveVariety variety;
  int degree = 1;
  int a = 0, b = 0, c = 0;
  PolyMatrix A, B;

  /// Rank of the cohomology bundle, b - a - c.
  int rank() const { return b - a - c; }
};

/// Checks shapes, rings and entry degrees; throws StructuralError.
MonadSpec make_monad(ProjectiveVariety variety, int degree, int a, int b, int c, PolyMatrix A, PolyMatrix B);

struct ExistenceVerdict {
  bool cond_i = false;   // b >= a + c and b >= 2c + n - 1
  bool cond_ii = false;  // b >= a + c + n
  bool exists = false;
};

ExistenceVerdict existence_conditions(int a, int b, int c, int n);

/// Human-readable list of the inequalities that fail, empty when a monad exists.
std::string violated_inequalities(int a, int b, int c, int n);

struct BandedPair {
  PolyMatrix A0;  // (2c+p+q) x (c+p+q)
  PolyMatrix B;   // c x (2c+p+q)
};

/// B = [X_{c,c+p} Y_{c,c+q}] and A0 = [Y_{c+p,c+p+q}; -X_{c+q,c+q+p}], where
/// X_{r,s} is the r x s band with x_j at (i, i+j). B * A0 vanishes identically.
BandedPair build_banded_pair(int c, int p, int q, std::span<const Polynomial> x, std::span<const Polynomial> y);

struct ConstructOptions {
  std::uint64_t seed = 7;
  int retry_budget = 20;
};

/// Builds a monad with linear entries on V following the existence proof, and
/// verifies the degeneracy codimension of f. Refuses when no monad of this
/// type exists, naming the failed inequality.
MonadSpec construct_monad(const ProjectiveVariety& v, int a, int b, int c, const ConstructOptions& options = {});

/// Every entry of B*A reduces to zero modulo the variety.
bool verify_complex(const MonadSpec& m);

/// Projective dimension of V intersected with {rank M < t}; -1 when empty.
int degeneracy_dim(const ProjectiveVariety& v, const PolyMatrix& m, int t);

struct VerificationReport {
  bool complex_ok = false;
  bool g_surjective = false;
  /// Dimension of the rank-deficiency locus of A on V; -1 when empty.
  int f_degeneracy_dim = -1;
  int g_degeneracy_dim = -1;
  int expected_codim = 0;
  bool f_codim_ok = false;
  bool is_monad = false;
  bool is_bundle = false;
  int rank = 0;
  std::optional<ProjectivePoint> witness;
  std::string witness_reason;
};

/// Symbolic verdicts; the witness is a best-effort point where a failed check
/// can be seen, found by sampling and point search.
VerificationReport verify_monad(const MonadSpec& m, std::uint64_t seed = 7);

/// (a, b, c) -> (c, b, a) with A' = B^T and B' = A^T.
MonadSpec dualize(const MonadSpec& m);

/// Residuals are the raw products; `commutes` asks that both vanish modulo
/// the variety's ideal.
struct MorphismCheck {
  bool commutes = false;
  PolyMatrix left_residual;   // P_B * A - A * P_A
  PolyMatrix right_residual;  // B * P_B - P_C * B
};

/// Whether (P_A, P_B, P_C) is an endomorphism of the monad.
MorphismCheck check_monad_morphism(const MonadSpec& m, const DenseMatrix& pa, const DenseMatrix& pb,
                                   const DenseMatrix& pc);

struct FamilyFormulas {
  long long h0_k_lower = 0;  // b(n+1) - c C(n+2, 2)
  long long fiber_dim = 0;   // a * h0_k_lower
  long long codim_z_bound = 0;  // a (c C(N+2, 2) - b(N+1) + a)
  std::vector<std::string> flags;
};

FamilyFormulas family_formulas(int a, int b, int c, int n, int big_n);

/// Every point of `points` lies in the ambient locus {rank M < t}, and that
/// locus lies inside the finite set. Decided symbolically: each product of one
/// linear generator per point ideal vanishes on the locus.
bool locus_equals_points(const PolyMatrix& m, int t, std::span<const ProjectivePoint> points);

/// Matrix with every entry replaced by its normal form modulo the variety.
PolyMatrix reduce_modulo(const PolyMatrix& m, const GroebnerBasis& basis);

}  // namespace monadlab
