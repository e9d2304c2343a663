#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monadlab/field.hpp"
#include "monadlab/monomial.hpp"

namespace monadlab {

struct Term {
  FieldElement coeff;
  Monomial mono;
};

/// Sparse polynomial in canonical form: nonzero coefficients, monomials strictly
/// descending under the ring's order. Equal polynomials have equal term lists.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Ring& ring) : ring_(ring) {}

  static Polynomial constant(const Ring& ring, const FieldElement& c);
  static Polynomial constant(const Ring& ring, std::int64_t c);
  static Polynomial variable(const Ring& ring, int index);
  static Polynomial monomial(const Ring& ring, const FieldElement& c, const Monomial& m);
  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const FieldElement& lead_coeff() const { return terms_.front().coeff; }
  /// Largest total degree of a term; -1 for zero.
  int total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const FieldElement& c) const;
  /// c * m * (*this).
  Polynomial times_term(const FieldElement& c, const Monomial& m) const;
  /// *this - c * m * g, the reduction step; one merge pass.
  Polynomial minus_term_times(const FieldElement& c, const Monomial& m, const Polynomial& g) const;
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;

  FieldElement evaluate(std::span<const FieldElement> point) const;

  /// Same polynomial in a ring with the same field and at least as many variables.
  Polynomial embed(const Ring& bigger) const;
  /// Same polynomial under another order of the same field and variable count.
  Polynomial reorder(MonomialOrder order) const;

  /// Renders with the given variable names (x0, x1, ... when empty).
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void require_compatible(const Polynomial& o) const;

  Ring ring_;
  std::vector<Term> terms_;
};

/// Returned by homogeneous_degree for the zero polynomial.
inline constexpr int kAnyDegree = -1;

/// Degree d when every term has degree d; kAnyDegree for zero; nullopt otherwise.
std::optional<int> homogeneous_degree(const Polynomial& p);

std::vector<std::string> default_variable_names(int nvars, const std::string& stem = "x");

}  // namespace monadlab
