#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "monadlab/groebner.hpp"

namespace monadlab {

/// Point of P^N with the first nonzero coordinate scaled to 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<FieldElement> coords);
  static ProjectivePoint from_ints(Field field, std::span<const long long> coords);

  std::span<const FieldElement> coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  /// "(0:0:0:0:1)".
  std::string to_string() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::vector<FieldElement> coords_;
};

/// Polynomial map from a parameter space onto the variety, used only to sample
/// points. Every image point must satisfy the variety's equations.
struct Parametrization {
  Ring params;
  std::vector<Polynomial> coords;
  std::vector<std::string> names;  // parameter names; empty means t0, t1, ...
};

/// Hypotheses the user asserts about the embedding; recorded, never computed.
/// not_in_quadric is "true", "false" or "compute".
struct VarietyAssertions {
  std::optional<bool> acm;
  std::optional<bool> linearly_normal;
  std::optional<std::string> not_in_quadric;

  friend bool operator==(const VarietyAssertions&, const VarietyAssertions&) = default;
};

/// X' in P^N cut out by a homogeneous ideal, with its Groebner basis and
/// dimension n computed once at construction.
class ProjectiveVariety {
 public:
  /// N is ring.nvars - 1 and must be at least 1. Rejects inhomogeneous
  /// generators and the unit ideal.
  ProjectiveVariety(std::string name, const Ring& ring, std::vector<Polynomial> generators,
                    std::vector<std::string> names = {});

  const std::string& name() const { return name_; }
  const Ring& ring() const { return ideal_.ring(); }
  int ambient_dim() const { return ideal_.ring().nvars - 1; }
  int dim() const { return dim_; }
  const Ideal& ideal() const { return ideal_; }
  const GroebnerBasis& basis() const { return basis_; }
  const std::vector<std::string>& variable_names() const { return names_; }

  const std::optional<Parametrization>& parametrization() const { return param_; }
  void set_parametrization(Parametrization p);

  const VarietyAssertions& assertions() const { return assertions_; }
  void set_assertions(VarietyAssertions a) { assertions_ = std::move(a); }

 private:
  std::string name_;
  Ideal ideal_;
  GroebnerBasis basis_;
  int dim_;
  std::vector<std::string> names_;
  std::optional<Parametrization> param_;
  VarietyAssertions assertions_;
};

bool contains_point(const ProjectiveVariety& v, const ProjectivePoint& p);

/// The ideal has a nonzero element of degree 2.
bool contained_in_quadric(const ProjectiveVariety& v);

/// The linear subspace cut out by `forms` misses the variety over the algebraic
/// closure: the affine cone of the intersection is the origin alone.
bool subspace_disjoint(const ProjectiveVariety& v, std::span<const Polynomial> forms);

/// m independent linear forms cutting a subspace disjoint from the variety.
/// Requires dim(V) < m <= N + 1. Coefficients are integers in [-5, 5] drawn
/// from a generator seeded with `seed`.
std::vector<Polynomial> find_disjoint_subspace(const ProjectiveVariety& v, int m, std::uint64_t seed,
                                               int budget = 200);

/// Linear form with integer coefficients in [-bound, bound].
Polynomial random_linear_form(const Ring& ring, std::mt19937_64& rng, int bound = 5);

/// Rational point of the projective zero set of a homogeneous ideal, found by
/// cutting down to finitely many points with random linear sections and solving
/// a lex basis. Over GF(p) roots are found exhaustively (p < 2^17 only); over
/// the rationals only small rationals are tried. Failure proves nothing.
std::optional<ProjectivePoint> find_rational_point(const Ideal& ideal, std::mt19937_64& rng, int attempts = 20);

/// Random point of the variety: through the parametrization when present, by
/// solving a hypersurface equation in one variable, or by find_rational_point.
std::optional<ProjectivePoint> sample_point(const ProjectiveVariety& v, std::mt19937_64& rng);

/// The linear forms x_i - P_i x_k (P_k = 1 the first nonzero coordinate),
/// which generate the ideal of the point.
std::vector<Polynomial> point_ideal_generators(const Ring& ring, const ProjectivePoint& p);

}  // namespace monadlab
