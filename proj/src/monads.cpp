#include "monadlab/monads.hpp"

#include <functional>
#include <random>

#include "monadlab/errors.hpp"

namespace monadlab {

namespace {

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

/// r x s band: entry (i, i+j) is forms[j]; needs s - r + 1 forms.
void place_band(PolyMatrix& m, std::size_t row0, std::size_t col0, std::size_t r, std::span<const Polynomial> forms,
                bool negate) {
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < forms.size(); ++j) m(row0 + i, col0 + i + j) = negate ? -forms[j] : forms[j];
}

PolyMatrix degeneracy_source(const ProjectiveVariety& v, const PolyMatrix& m) {
  if (!(m.ring() == v.ring())) throw StructuralError("matrix ring " + m.ring().describe() + " differs from the variety's");
  return m;
}

Ideal locus_ideal(const ProjectiveVariety& v, const PolyMatrix& m, int t) {
  const Ideal minors = minors_ideal(degeneracy_source(v, m), t);
  std::vector<Polynomial> gens(v.basis().elements().begin(), v.basis().elements().end());
  return Ideal(v.ring(), std::move(gens)).with(minors.generators());
}

DenseMatrix random_constant_matrix(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  DenseMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = FieldElement(f, coeff(rng));
  return m;
}

/// m random linear forms whose first min(m, N + 1) are independent, so that
/// together they still have no common zero in P^N.
std::vector<Polynomial> generic_coordinates(const Ring& ring, int m, std::mt19937_64& rng) {
  const auto nvars = static_cast<std::size_t>(ring.nvars);
  const std::size_t lead = std::min(static_cast<std::size_t>(m), nvars);
  for (;;) {
    std::vector<Polynomial> forms;
    DenseMatrix coeffs(ring.field, lead, nvars);
    for (int i = 0; i < m; ++i) {
      forms.push_back(random_linear_form(ring, rng));
      if (static_cast<std::size_t>(i) >= lead) continue;
      for (std::size_t j = 0; j < nvars; ++j) {
        std::vector<FieldElement> e(nvars, FieldElement::zero(ring.field));
        e[j] = FieldElement::one(ring.field);
        coeffs(static_cast<std::size_t>(i), j) = forms.back().evaluate(e);
      }
    }
    if (coeffs.rank() == lead) return forms;
  }
}

MonadSpec construct_banded(const ProjectiveVariety& v, int a, int b, int c, const ConstructOptions& options,
                           bool use_coordinates) {
  const Ring& ring = v.ring();
  const int big_n = v.ambient_dim(), n = v.dim();
  const int m = b - 2 * c + 2;
  std::mt19937_64 rng(options.seed);

  const int p = (b - 2 * c + 1) / 2, q = (b - 2 * c) / 2;
  // f degenerates in codimension at least s + 1 on V; an empty locus meets any
  // codimension.
  const int s = b - a - c;
  const int max_dim = std::max(n - s - 1, -1);
  for (int attempt = 0; attempt < options.retry_budget; ++attempt) {
    // Raw coordinates are not generic: the banded pair built from x0..x3
    // reproduces the determinant x0*x3 - x1*x2, whose rulings then sit inside
    // the degeneracy locus. A random change of coordinates avoids this.
    const auto forms = use_coordinates || m == big_n + 1
                           ? generic_coordinates(ring, m, rng)
                           : find_disjoint_subspace(v, m, options.seed * 0x9E3779B97F4A7C15ull + 1 +
                                                              static_cast<std::uint64_t>(attempt));
    const std::span<const Polynomial> all(forms);
    const BandedPair pair = build_banded_pair(c, p, q, all.subspan(0, static_cast<std::size_t>(p + 1)),
                                              all.subspan(static_cast<std::size_t>(p + 1)));
    if (a == 0) return make_monad(v, 1, a, b, c, PolyMatrix(ring, static_cast<std::size_t>(b), 0), pair.B);
    const DenseMatrix phi = random_constant_matrix(ring.field, static_cast<std::size_t>(b - c),
                                                   static_cast<std::size_t>(a), rng);
    PolyMatrix A = pair.A0 * phi;
    if (degeneracy_dim(v, A, a) <= max_dim) return make_monad(v, 1, a, b, c, std::move(A), pair.B);
  }
  throw SearchFailure("no reduction matrix gave f a degeneracy locus of dimension <= " + std::to_string(max_dim) +
                      " after " + std::to_string(options.retry_budget) + " attempts");
}

}  // namespace

MonadSpec make_monad(ProjectiveVariety variety, int degree, int a, int b, int c, PolyMatrix A, PolyMatrix B) {
  if (a < 0 || b < 0 || c < 0) throw StructuralError("monad ranks must be nonnegative");
  if (degree < 1) throw StructuralError("monad entry degree must be positive");
  const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b), uc = static_cast<std::size_t>(c);
  if (A.rows() != ub || A.cols() != ua) throw StructuralError("A is " + shape(A.rows(), A.cols()) + ", expected " + shape(ub, ua));
  if (B.rows() != uc || B.cols() != ub) throw StructuralError("B is " + shape(B.rows(), B.cols()) + ", expected " + shape(uc, ub));
  for (const auto* m : {&A, &B}) {
    if (m->rows() * m->cols() == 0) continue;
    if (!(m->ring() == variety.ring())) throw StructuralError("matrix ring " + m->ring().describe() + " differs from the variety's");
    const auto d = m->entry_degree();
    if (!d || (*d != degree && *d != kAnyDegree))
      throw StructuralError("matrix entries are not forms of degree " + std::to_string(degree));
  }
  if (A.rows() * A.cols() == 0) A = PolyMatrix(variety.ring(), ub, ua);
  if (B.rows() * B.cols() == 0) B = PolyMatrix(variety.ring(), uc, ub);
  return MonadSpec{std::move(variety), degree, a, b, c, std::move(A), std::move(B)};
}

ExistenceVerdict existence_conditions(int a, int b, int c, int n) {
  if (a < 0 || c < 0 || b < 1 || n < 1)
    throw ArgumentError("existence conditions need a, c >= 0 and b, n >= 1");
  ExistenceVerdict v;
  v.cond_i = b >= a + c && b >= 2 * c + n - 1;
  v.cond_ii = b >= a + c + n;
  v.exists = v.cond_i || v.cond_ii;
  return v;
}

std::string violated_inequalities(int a, int b, int c, int n) {
  if (existence_conditions(a, b, c, n).exists) return "";
  auto fails = [&](const std::string& rhs_text, int rhs) {
    return "b >= " + rhs_text + " fails (" + std::to_string(b) + " < " + std::to_string(rhs) + ")";
  };
  if (b < a + c) return fails("a + c", a + c);
  return fails("2c + n - 1", 2 * c + n - 1) + " and " + fails("a + c + n", a + c + n);
}

BandedPair build_banded_pair(int c, int p, int q, std::span<const Polynomial> x, std::span<const Polynomial> y) {
  if (c < 0 || p < 0 || q < 0) throw ArgumentError("banded pair sizes must be nonnegative");
  if (x.size() != static_cast<std::size_t>(p + 1) || y.size() != static_cast<std::size_t>(q + 1))
    throw ArgumentError("banded pair with p = " + std::to_string(p) + ", q = " + std::to_string(q) + " needs " +
                        std::to_string(p + 1) + " and " + std::to_string(q + 1) + " forms, got " +
                        std::to_string(x.size()) + " and " + std::to_string(y.size()));
  const Ring ring = x.front().ring();
  for (const auto& f : y)
    if (!(f.ring() == ring)) throw StructuralError("banded pair forms from different rings");
  const auto uc = static_cast<std::size_t>(c), up = static_cast<std::size_t>(p), uq = static_cast<std::size_t>(q);
  BandedPair out{PolyMatrix(ring, 2 * uc + up + uq, uc + up + uq), PolyMatrix(ring, uc, 2 * uc + up + uq)};
  place_band(out.B, 0, 0, uc, x, false);
  place_band(out.B, 0, uc + up, uc, y, false);
  place_band(out.A0, 0, 0, uc + up, y, false);
  place_band(out.A0, uc + up, 0, uc + uq, x, true);
  return out;
}

MonadSpec construct_monad(const ProjectiveVariety& v, int a, int b, int c, const ConstructOptions& options) {
  const int n = v.dim(), big_n = v.ambient_dim();
  const auto verdict = existence_conditions(a, b, c, n);
  if (!verdict.exists)
    throw Refusal("no monad of type (" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) +
                  ") on a variety of dimension " + std::to_string(n) + ": " + violated_inequalities(a, b, c, n));
  if (b >= 2 * c + big_n - 1) return construct_banded(v, a, b, c, options, true);
  if (b >= a + c + big_n) return dualize(construct_monad(v, c, b, a, options));
  if (verdict.cond_i) return construct_banded(v, a, b, c, options, false);
  return dualize(construct_monad(v, c, b, a, options));
}

bool verify_complex(const MonadSpec& m) {
  if (m.a == 0 || m.c == 0) return true;
  const PolyMatrix ba = m.B * m.A;
  for (const auto& e : ba.entries())
    if (!normal_form(e, m.variety.basis()).is_zero()) return false;
  return true;
}

int degeneracy_dim(const ProjectiveVariety& v, const PolyMatrix& m, int t) {
  if (t <= 0) return -1;
  return projective_dimension(buchberger(locus_ideal(v, m, t)));
}

VerificationReport verify_monad(const MonadSpec& m, std::uint64_t seed) {
  VerificationReport r;
  const ProjectiveVariety& v = m.variety;
  const int n = v.dim();
  r.complex_ok = verify_complex(m);
  r.g_degeneracy_dim = m.c == 0 ? -1 : degeneracy_dim(v, m.B, m.c);
  r.g_surjective = r.g_degeneracy_dim == -1;
  r.f_degeneracy_dim = m.a == 0 ? -1 : degeneracy_dim(v, m.A, m.a);
  r.expected_codim = m.b - m.a - m.c + 1;
  r.f_codim_ok = r.f_degeneracy_dim == -1 || n - r.f_degeneracy_dim >= r.expected_codim;
  r.is_monad = r.complex_ok && r.g_surjective && r.f_codim_ok;
  r.is_bundle = r.is_monad && r.f_degeneracy_dim == -1;
  r.rank = m.rank();

  std::mt19937_64 rng(seed);
  if (!r.complex_ok) {
    const PolyMatrix ba = m.B * m.A;
    for (int attempt = 0; attempt < 50 && !r.witness; ++attempt) {
      auto p = sample_point(v, rng);
      if (p && !ba.evaluate(p->coords()).is_zero()) {
        r.witness = p;
        r.witness_reason = "B*A is nonzero at this point of the variety";
      }
    }
  } else if (!r.g_surjective) {
    r.witness = find_rational_point(locus_ideal(v, m.B, m.c), rng);
    if (r.witness) r.witness_reason = "B has rank below c at this point of the variety";
  } else if (r.f_degeneracy_dim >= 0) {
    r.witness = find_rational_point(locus_ideal(v, m.A, m.a), rng);
    if (r.witness) r.witness_reason = "A has rank below a at this point of the variety";
  }
  return r;
}

MonadSpec dualize(const MonadSpec& m) {
  return MonadSpec{m.variety, m.degree, m.c, m.b, m.a, m.B.transpose(), m.A.transpose()};
}

PolyMatrix reduce_modulo(const PolyMatrix& m, const GroebnerBasis& basis) {
  PolyMatrix out(m.ring(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = normal_form(m(r, c), basis);
  return out;
}

MorphismCheck check_monad_morphism(const MonadSpec& m, const DenseMatrix& pa, const DenseMatrix& pb,
                                   const DenseMatrix& pc) {
  const auto ua = static_cast<std::size_t>(m.a), ub = static_cast<std::size_t>(m.b), uc = static_cast<std::size_t>(m.c);
  if (pa.rows() != ua || pa.cols() != ua || pb.rows() != ub || pb.cols() != ub || pc.rows() != uc || pc.cols() != uc)
    throw StructuralError("morphism matrices must be " + shape(ua, ua) + ", " + shape(ub, ub) + " and " + shape(uc, uc));
  MorphismCheck out;
  out.left_residual = pb * m.A - m.A * pa;
  out.right_residual = m.B * pb - pc * m.B;
  out.commutes = reduce_modulo(out.left_residual, m.variety.basis()).is_zero() &&
                 reduce_modulo(out.right_residual, m.variety.basis()).is_zero();
  return out;
}

FamilyFormulas family_formulas(int a, int b, int c, int n, int big_n) {
  if (n < 1 || big_n < 1) throw ArgumentError("family formulas need n, N >= 1");
  auto choose2 = [](long long m) { return m * (m - 1) / 2; };
  FamilyFormulas f;
  f.h0_k_lower = static_cast<long long>(b) * (n + 1) - c * choose2(n + 2);
  f.fiber_dim = a * f.h0_k_lower;
  f.codim_z_bound = a * (c * choose2(big_n + 2) - static_cast<long long>(b) * (big_n + 1) + a);
  if (c < 1 || c > 2) f.flags.push_back("c = " + std::to_string(c) + " lies outside 1 <= c <= 2, where the family is known to be irreducible");
  if (a >= 0 && c >= 0 && b >= 1 && !existence_conditions(a, b, c, n).exists)
    f.flags.push_back("no monad of this type exists: " + violated_inequalities(a, b, c, n));
  if (f.h0_k_lower < a) f.flags.push_back("h0 lower bound " + std::to_string(f.h0_k_lower) + " is below a = " + std::to_string(a));
  return f;
}

bool locus_equals_points(const PolyMatrix& m, int t, std::span<const ProjectivePoint> points) {
  const Ring& ring = m.ring();
  const Ideal minors = minors_ideal(m, t);
  for (const auto& p : points)
    if (m.evaluate(p.coords()).rank() >= static_cast<std::size_t>(t)) return false;
  if (points.empty()) return projective_dimension(buchberger(minors)) < 0;

  std::vector<std::vector<Polynomial>> point_gens;
  for (const auto& p : points) point_gens.push_back(point_ideal_generators(ring, p));
  std::vector<std::size_t> choice(points.size(), 0);
  for (;;) {
    Polynomial product = Polynomial::constant(ring, 1);
    for (std::size_t i = 0; i < choice.size(); ++i) product = product * point_gens[i][choice[i]];
    if (!vanishes_on_zero_set(minors, product)) return false;
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == point_gens[i].size()) choice[i++] = 0;
    if (i == choice.size()) return true;
  }
}

}  // namespace monadlab
