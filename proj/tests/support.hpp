#pragma once

// Shared helpers for the test binaries: terse polynomial construction, fixture
// loading and small random generators.

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "monadlab/io.hpp"
#include "monadlab/parser.hpp"

namespace monadlab {

// Lets doctest print the operands of failed comparisons.
inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) { return os << p.to_string(); }

}  // namespace monadlab

namespace monadlab::testing {

inline Polynomial poly(const Ring& ring, const std::string& text) {
  const auto names = default_variable_names(ring.nvars);
  return parse_polynomial(text, ring, names);
}

inline std::vector<Polynomial> polys(const Ring& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(poly(ring, t));
  return out;
}

inline PolyMatrix matrix(const Ring& ring, std::vector<std::vector<std::string>> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = poly(ring, rows[r][c]);
  return m;
}

inline ProjectiveVariety fixture_variety(const std::string& name, std::optional<Field> field = std::nullopt) {
  return VarietyResolver({fixture_dir()}).resolve(name, field);
}

inline MonadSpec fixture_monad(const std::string& name, std::optional<Field> field = std::nullopt) {
  return monad_from_json(read_json_file(fixture_dir() / (name + ".json")), VarietyResolver({fixture_dir()}), field)
      .monad;
}

inline ProjectivePoint point(Field f, std::initializer_list<long long> coords) {
  const std::vector<long long> v(coords);
  return ProjectivePoint::from_ints(f, v);
}

/// Random polynomial with at most `terms` terms of degree at most `max_deg`,
/// coefficients in [-9, 9].
inline Polynomial random_poly(const Ring& ring, std::mt19937_64& rng, int terms = 4, int max_deg = 3) {
  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, max_deg), var(0, ring.nvars - 1);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    std::vector<int> e(static_cast<std::size_t>(ring.nvars), 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(var(rng))];
    ts.push_back({FieldElement(ring.field, coeff(rng)), Monomial(e)});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

/// Random homogeneous polynomial of degree d.
inline Polynomial random_form(const Ring& ring, std::mt19937_64& rng, int d, int terms = 4) {
  std::uniform_int_distribution<int> coeff(-9, 9), var(0, ring.nvars - 1);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    std::vector<int> e(static_cast<std::size_t>(ring.nvars), 0);
    for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(var(rng))];
    ts.push_back({FieldElement(ring.field, coeff(rng)), Monomial(e)});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

inline std::vector<FieldElement> random_vector(Field f, std::mt19937_64& rng, int n, int bound = 50) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<FieldElement> v;
  for (int i = 0; i < n; ++i) v.emplace_back(f, d(rng));
  return v;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace monadlab::testing
