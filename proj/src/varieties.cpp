#include "monadlab/varieties.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "monadlab/errors.hpp"
#include "monadlab/linalg.hpp"

namespace monadlab {

namespace {

FieldElement random_element(Field f, std::mt19937_64& rng) {
  if (f.is_rational()) return FieldElement(f, std::uniform_int_distribution<int>(-9, 9)(rng));
  return FieldElement(f, std::uniform_int_distribution<std::int64_t>(0, f.characteristic() - 1)(rng));
}

/// Coefficients by power of x_var after substituting `values` for every
/// other variable flagged in `known`.
std::vector<FieldElement> univariate_coefficients(const Polynomial& p, int var, std::span<const FieldElement> values,
                                                  std::uint32_t known) {
  const Field f = p.ring().field;
  std::vector<FieldElement> coeffs;
  for (const auto& t : p.terms()) {
    FieldElement c = t.coeff;
    for (int i = 0; i < p.ring().nvars; ++i) {
      if (i == var || t.mono[i] == 0) continue;
      if (!(known >> i & 1u)) throw StructuralError("univariate_coefficients: unassigned variable");
      c *= values[static_cast<std::size_t>(i)].pow(static_cast<std::uint64_t>(t.mono[i]));
    }
    const auto e = static_cast<std::size_t>(t.mono[var]);
    if (coeffs.size() <= e) coeffs.resize(e + 1, FieldElement::zero(f));
    coeffs[e] += c;
  }
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

FieldElement horner(std::span<const FieldElement> coeffs, const FieldElement& x) {
  FieldElement acc = FieldElement::zero(x.field());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

constexpr std::uint32_t kExhaustiveRootLimit = 1u << 17;

std::vector<FieldElement> roots_of(std::span<const FieldElement> coeffs, Field f) {
  std::vector<FieldElement> roots;
  if (coeffs.size() <= 1) return roots;
  if (!f.is_rational()) {
    const std::uint64_t p = f.characteristic();
    std::vector<std::uint64_t> c;
    for (const auto& x : coeffs) c.push_back(x.residue());
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t acc = 0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + *it) % p;
      if (acc == 0) roots.emplace_back(f, static_cast<std::int64_t>(x));
    }
    return roots;
  }
  for (int den = 1; den <= 6; ++den)
    for (int num = -30; num <= 30; ++num) {
      if (std::gcd(num, den) != 1) continue;
      const FieldElement x(f, Rational(num, den));
      if (horner(coeffs, x).is_zero()) roots.push_back(x);
    }
  return roots;
}

/// Solves a zero-dimensional lex basis by back substitution from the last
/// variable, backtracking over candidate roots. Returns the first solution.
std::optional<std::vector<FieldElement>> solve_triangular(const GroebnerBasis& lex, std::mt19937_64& rng) {
  const Ring& ring = lex.ring();
  const int n = ring.nvars;
  std::vector<std::vector<Polynomial>> by_level(static_cast<std::size_t>(n));
  for (const auto& g : lex.elements()) {
    std::uint32_t support = 0;
    for (const auto& t : g.terms()) support |= t.mono.support();
    if (support == 0) return std::nullopt;
    by_level[static_cast<std::size_t>(std::countr_zero(support))].push_back(g);
  }
  std::vector<FieldElement> values(static_cast<std::size_t>(n), FieldElement::zero(ring.field));
  std::function<bool(int, std::uint32_t)> descend = [&](int var, std::uint32_t known) -> bool {
    if (var < 0) return true;
    const auto& polys = by_level[static_cast<std::size_t>(var)];
    std::vector<std::vector<FieldElement>> univariates;
    for (const auto& g : polys) {
      auto u = univariate_coefficients(g, var, values, known);
      if (u.size() == 1) return false;
      if (!u.empty()) univariates.push_back(std::move(u));
    }
    std::vector<FieldElement> candidates;
    if (univariates.empty()) {
      candidates.push_back(random_element(ring.field, rng));
    } else {
      std::sort(univariates.begin(), univariates.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
      for (const auto& r : roots_of(univariates.front(), ring.field)) {
        bool ok = true;
        for (std::size_t i = 1; i < univariates.size() && ok; ++i) ok = horner(univariates[i], r).is_zero();
        if (ok) candidates.push_back(r);
      }
    }
    for (const auto& r : candidates) {
      values[static_cast<std::size_t>(var)] = r;
      if (descend(var - 1, known | (1u << var))) return true;
    }
    return false;
  };
  if (!descend(n - 1, 0)) return std::nullopt;
  return values;
}

}  // namespace

ProjectivePoint::ProjectivePoint(std::vector<FieldElement> coords) : coords_(std::move(coords)) {
  auto lead = std::find_if(coords_.begin(), coords_.end(), [](const FieldElement& x) { return !x.is_zero(); });
  if (lead == coords_.end()) throw ArgumentError("projective point with all coordinates zero");
  const FieldElement inv = lead->inverse();
  for (auto& x : coords_) x *= inv;
}

ProjectivePoint ProjectivePoint::from_ints(Field field, std::span<const long long> coords) {
  std::vector<FieldElement> v;
  for (auto c : coords) v.emplace_back(field, static_cast<std::int64_t>(c));
  return ProjectivePoint(std::move(v));
}

std::string ProjectivePoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ':';
    s += coords_[i].to_string();
  }
  return s + ")";
}

ProjectiveVariety::ProjectiveVariety(std::string name, const Ring& ring, std::vector<Polynomial> generators,
                                     std::vector<std::string> names)
    : name_(std::move(name)), ideal_(ring, std::move(generators)), names_(std::move(names)) {
  if (ring.nvars < 2) throw ArgumentError("a projective variety needs N >= 1");
  if (names_.empty()) names_ = default_variable_names(ring.nvars);
  if (static_cast<int>(names_.size()) != ring.nvars)
    throw StructuralError("variety declares " + std::to_string(names_.size()) + " names for " +
                          std::to_string(ring.nvars) + " variables");
  for (const auto& g : ideal_.generators())
    if (!homogeneous_degree(g)) throw ArgumentError("generator " + g.to_string(names_) + " is not homogeneous");
  basis_ = buchberger(ideal_, ring.order);
  dim_ = projective_dimension(basis_);
  if (basis_.is_unit() || dim_ < 0) throw ArgumentError("variety '" + name_ + "' is empty");
}

void ProjectiveVariety::set_parametrization(Parametrization p) {
  if (static_cast<int>(p.coords.size()) != ring().nvars)
    throw StructuralError("parametrization needs one coordinate per variable");
  param_ = std::move(p);
}

bool contains_point(const ProjectiveVariety& v, const ProjectivePoint& p) {
  if (static_cast<int>(p.size()) != v.ring().nvars) throw StructuralError("point has the wrong number of coordinates");
  for (const auto& g : v.ideal().generators())
    if (!g.evaluate(p.coords()).is_zero()) return false;
  return true;
}

bool contained_in_quadric(const ProjectiveVariety& v) {
  const std::int64_t n1 = v.ring().nvars;
  return hilbert_value(v.basis(), 2) < n1 * (n1 + 1) / 2;
}

bool subspace_disjoint(const ProjectiveVariety& v, std::span<const Polynomial> forms) {
  for (const auto& f : forms) {
    const auto d = homogeneous_degree(f);
    if (!d || (*d != 1 && *d != kAnyDegree)) throw ArgumentError("subspace form " + f.to_string(v.variable_names()) + " is not linear");
  }
  return krull_dimension(buchberger(v.ideal().with(forms))) <= 0;
}

Polynomial random_linear_form(const Ring& ring, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  Polynomial f(ring);
  for (int i = 0; i < ring.nvars; ++i) f += Polynomial::variable(ring, i) * Polynomial::constant(ring, coeff(rng));
  return f;
}

std::vector<Polynomial> find_disjoint_subspace(const ProjectiveVariety& v, int m, std::uint64_t seed, int budget) {
  const int n = v.dim(), big_n = v.ambient_dim();
  if (m <= n)
    throw ArgumentError("impossible: " + std::to_string(m) + " forms cut a subspace of dimension " +
                        std::to_string(big_n - m) + ", which meets a variety of dimension " + std::to_string(n));
  if (m > big_n + 1) throw ArgumentError("more forms (" + std::to_string(m) + ") than coordinates");
  std::mt19937_64 rng(seed);
  const Ring& ring = v.ring();
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<Polynomial> forms;
    DenseMatrix coeffs(ring.field, static_cast<std::size_t>(m), static_cast<std::size_t>(ring.nvars));
    for (int r = 0; r < m; ++r) {
      forms.push_back(random_linear_form(ring, rng));
      for (const auto& t : forms.back().terms())
        coeffs(static_cast<std::size_t>(r), static_cast<std::size_t>(std::countr_zero(t.mono.support()))) = t.coeff;
    }
    if (coeffs.rank() != static_cast<std::size_t>(m)) continue;
    if (subspace_disjoint(v, forms)) return forms;
  }
  throw SearchFailure("no disjoint subspace cut by " + std::to_string(m) + " forms after " + std::to_string(budget) +
                      " attempts");
}

std::optional<ProjectivePoint> find_rational_point(const Ideal& ideal, std::mt19937_64& rng, int attempts) {
  const Ring ring = ideal.ring();
  if (!ring.field.is_rational() && ring.field.characteristic() > kExhaustiveRootLimit) return std::nullopt;
  const GroebnerBasis gb = buchberger(ideal);
  const int dim = projective_dimension(gb);
  if (dim < 0) return std::nullopt;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Polynomial> extra;
    for (int i = 0; i < dim; ++i) extra.push_back(random_linear_form(ring, rng));
    extra.push_back(random_linear_form(ring, rng) - Polynomial::constant(ring, 1));
    const GroebnerBasis lex = buchberger(ideal.with(extra), MonomialOrder::lex);
    if (lex.is_unit() || krull_dimension(lex) != 0) continue;
    auto solution = solve_triangular(lex, rng);
    if (!solution) continue;
    bool ok = true;
    for (const auto& g : ideal.generators()) ok = ok && g.evaluate(*solution).is_zero();
    if (ok) return ProjectivePoint(std::move(*solution));
  }
  return std::nullopt;
}

std::optional<ProjectivePoint> sample_point(const ProjectiveVariety& v, std::mt19937_64& rng) {
  const Ring& ring = v.ring();
  const Field f = ring.field;
  if (v.parametrization()) {
    const auto& par = *v.parametrization();
    for (int attempt = 0; attempt < 50; ++attempt) {
      std::vector<FieldElement> params;
      for (int i = 0; i < par.params.nvars; ++i) params.push_back(random_element(f, rng));
      std::vector<FieldElement> coords;
      bool nonzero = false;
      for (const auto& c : par.coords) {
        coords.push_back(c.evaluate(params));
        nonzero = nonzero || !coords.back().is_zero();
      }
      if (!nonzero) continue;
      ProjectivePoint p(std::move(coords));
      if (!contains_point(v, p)) throw StructuralError("parametrization of '" + v.name() + "' leaves the variety");
      return p;
    }
    return std::nullopt;
  }

  const auto gens = v.basis().elements();
  if (gens.empty()) {
    for (int attempt = 0; attempt < 50; ++attempt) {
      std::vector<FieldElement> coords;
      for (int i = 0; i < ring.nvars; ++i) coords.push_back(random_element(f, rng));
      if (std::any_of(coords.begin(), coords.end(), [](auto& x) { return !x.is_zero(); }))
        return ProjectivePoint(std::move(coords));
    }
    return std::nullopt;
  }

  if (gens.size() == 1) {
    const Polynomial& g = gens.front();
    std::vector<int> solvable;
    for (int i = 0; i < ring.nvars; ++i) {
      int deg = 0;
      for (const auto& t : g.terms()) deg = std::max(deg, t.mono[i]);
      if (deg == 1 || deg == 2) solvable.push_back(i);
    }
    if (!solvable.empty()) {
      for (int attempt = 0; attempt < 100; ++attempt) {
        const int var = solvable[std::uniform_int_distribution<std::size_t>(0, solvable.size() - 1)(rng)];
        std::vector<FieldElement> coords;
        for (int i = 0; i < ring.nvars; ++i) coords.push_back(random_element(f, rng));
        const auto u = univariate_coefficients(g, var, coords, ~(1u << var));
        std::optional<FieldElement> root;
        if (u.size() == 2) {
          root = -u[0] / u[1];
        } else if (u.size() == 3) {
          const FieldElement two(f, 2);
          if (f.characteristic() == 2) continue;
          const FieldElement disc = u[1] * u[1] - FieldElement(f, 4) * u[2] * u[0];
          if (auto s = square_root(disc)) root = (-u[1] + *s) / (two * u[2]);
        }
        if (!root) continue;
        coords[static_cast<std::size_t>(var)] = *root;
        if (std::all_of(coords.begin(), coords.end(), [](auto& x) { return x.is_zero(); })) continue;
        return ProjectivePoint(std::move(coords));
      }
      return std::nullopt;
    }
  }
  return find_rational_point(v.ideal(), rng);
}

std::vector<Polynomial> point_ideal_generators(const Ring& ring, const ProjectivePoint& p) {
  if (static_cast<int>(p.size()) != ring.nvars) throw StructuralError("point has the wrong number of coordinates");
  const auto coords = p.coords();
  const auto k = static_cast<std::size_t>(
      std::find_if(coords.begin(), coords.end(), [](const FieldElement& x) { return !x.is_zero(); }) - coords.begin());
  std::vector<Polynomial> gens;
  const Polynomial xk = Polynomial::variable(ring, static_cast<int>(k));
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (i != k) gens.push_back(Polynomial::variable(ring, static_cast<int>(i)) - xk.scaled(coords[i]));
  return gens;
}

}  // namespace monadlab
