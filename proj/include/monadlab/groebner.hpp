#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "monadlab/poly_matrix.hpp"
#include "monadlab/polynomial.hpp"

namespace monadlab {

/// Finitely generated ideal of a polynomial ring.
class Ideal {
 public:
  explicit Ideal(const Ring& ring, std::vector<Polynomial> generators = {});

  const Ring& ring() const { return ring_; }
  std::span<const Polynomial> generators() const { return gens_; }

  Ideal operator+(const Ideal& o) const;
  Ideal with(std::span<const Polynomial> extra) const;

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
};

/// Reduced Groebner basis: monic, interreduced, sorted by descending lead.
/// Unique for a given ideal and order, so two computations compare equal.
class GroebnerBasis {
 public:
  const Ring& ring() const { return ring_; }
  MonomialOrder order() const { return ring_.order; }
  std::span<const Polynomial> elements() const { return elements_; }
  bool is_unit() const;

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  friend GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order);
  Ring ring_;
  std::vector<Polynomial> elements_;
};

/// Buchberger's algorithm with the coprime-lead and chain criteria and sugar
/// pair selection. The input is first row-reduced as a set of vectors, which
/// keeps determinantal ideals with many dependent minors cheap.
GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order = MonomialOrder::grevlex);

/// Remainder of full reduction; zero exactly when p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);
bool ideal_contains(const GroebnerBasis& basis, const Polynomial& p);

/// Krull dimension of R/I read off the lead-term ideal: the largest set of
/// variables containing the support of no lead monomial. -1 for the unit ideal.
int krull_dimension(const GroebnerBasis& basis);

/// Dimension of the projective zero set of a homogeneous ideal; -1 when empty.
inline int projective_dimension(const GroebnerBasis& basis) { return krull_dimension(basis) - 1; }

/// Number of standard monomials of degree d (the Hilbert function of R/I at d).
std::int64_t hilbert_value(const GroebnerBasis& basis, int d);

/// C(14,7): enough for every minor count in 14-column matrices.
inline constexpr std::size_t kDefaultMinorCap = 3432;

/// Ideal of all t x t minors, made monic, deduplicated and sorted. Refuses when
/// the number of minors exceeds `cap`.
Ideal minors_ideal(const PolyMatrix& m, int t, std::size_t cap = kDefaultMinorCap);

/// True when g vanishes on every zero of I over the algebraic closure, i.e. g
/// lies in the radical of I. Decided with one extra variable: 1 - s*g.
bool vanishes_on_zero_set(const Ideal& ideal, const Polynomial& g);

/// Strict weak order used to list polynomials reproducibly.
bool canonical_less(const Polynomial& a, const Polynomial& b);

}  // namespace monadlab
