#include "monadlab/catalog.hpp"

#include <algorithm>
#include <array>

#include "monadlab/errors.hpp"

namespace monadlab {

namespace {

constexpr int kPluckerVars = 20;

/// Index of X_ijk for i < j < k in lexicographic order.
int plucker_index(int i, int j, int k) {
  int idx = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c, ++idx)
        if (a == i && b == j && c == k) return idx;
  throw ArgumentError("no Pluecker coordinate X" + std::to_string(i) + std::to_string(j) + std::to_string(k));
}

/// X with arbitrary index order: alternating, zero on repeats.
Polynomial plucker(const Ring& ring, std::array<int, 3> idx) {
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i + 1 < 3; ++i)
      if (idx[static_cast<std::size_t>(i)] > idx[static_cast<std::size_t>(i) + 1]) {
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(i) + 1]);
        sign = -sign;
      }
  if (idx[0] == idx[1] || idx[1] == idx[2]) return Polynomial(ring);
  const Polynomial x = Polynomial::variable(ring, plucker_index(idx[0], idx[1], idx[2]));
  return sign > 0 ? x : -x;
}

void require_plucker_ring(const Ring& ring) {
  if (ring.nvars != kPluckerVars) throw StructuralError("Pluecker forms need a ring with 20 variables");
}

MonadSpec banded_k_monad(const ProjectiveVariety& g25, int k, std::span<const Polynomial> forms) {
  if (k < 1) throw ArgumentError("Grassmannian monads need k >= 1");
  const auto half = forms.size() / 2;
  const int p = static_cast<int>(half) - 1;
  const BandedPair pair = build_banded_pair(k, p, p, forms.subspan(0, half), forms.subspan(half));
  const PolyMatrix A = -pair.A0.select_columns(static_cast<std::size_t>(p), static_cast<std::size_t>(k));
  const int b = 2 * k + 2 * p;
  return make_monad(g25, 1, k, b, k, A, pair.B);
}

}  // namespace

std::vector<std::string> plucker_names() {
  std::vector<std::string> names;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) names.push_back("X" + std::to_string(a) + std::to_string(b) + std::to_string(c));
  return names;
}

std::vector<Polynomial> plucker_quadrics(const Ring& ring) {
  require_plucker_ring(ring);
  std::vector<Polynomial> relations;
  for (int j0 = 0; j0 < 6; ++j0)
    for (int j1 = j0 + 1; j1 < 6; ++j1)
      for (int l0 = 0; l0 < 6; ++l0)
        for (int l1 = l0 + 1; l1 < 6; ++l1)
          for (int l2 = l1 + 1; l2 < 6; ++l2)
            for (int l3 = l2 + 1; l3 < 6; ++l3) {
              const std::array<int, 4> l{l0, l1, l2, l3};
              Polynomial sum(ring);
              for (int s = 0; s < 4; ++s) {
                std::array<int, 3> rest{};
                for (int t = 0, u = 0; t < 4; ++t)
                  if (t != s) rest[static_cast<std::size_t>(u++)] = l[static_cast<std::size_t>(t)];
                Polynomial term = plucker(ring, {j0, j1, l[static_cast<std::size_t>(s)]}) * plucker(ring, rest);
                sum += s % 2 ? -term : term;
              }
              if (!sum.is_zero()) relations.push_back(sum);
            }

  // Greedy independent subset, tested by the rank of the growing span.
  std::vector<Polynomial> chosen;
  std::vector<Monomial> monos = monomials_of_degree(ring.nvars, 2, ring.order);
  auto column = [&](const Monomial& m) {
    return static_cast<std::size_t>(std::find(monos.begin(), monos.end(), m) - monos.begin());
  };
  std::size_t rank = 0;
  for (const auto& rel : relations) {
    DenseMatrix m(ring.field, chosen.size() + 1, monos.size());
    for (std::size_t r = 0; r < chosen.size(); ++r)
      for (const auto& t : chosen[r].terms()) m(r, column(t.mono)) = t.coeff;
    for (const auto& t : rel.terms()) m(chosen.size(), column(t.mono)) = t.coeff;
    const std::size_t new_rank = m.rank();
    if (new_rank > rank) {
      chosen.push_back(rel);
      rank = new_rank;
    }
  }
  return chosen;
}

ProjectiveVariety grassmannian_g25(Field field) {
  const Ring ring(field, kPluckerVars);
  ProjectiveVariety g("g25", ring, plucker_quadrics(ring), plucker_names());
  const Ring params(field, 18);
  auto entry = [&](int r, int c) { return Polynomial::variable(params, r * 6 + c); };
  std::vector<Polynomial> coords;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        const int col[3] = {a, b, c};
        Polynomial det(params);
        const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
        for (int s = 0; s < 6; ++s) {
          Polynomial term = entry(0, col[perms[s][0]]) * entry(1, col[perms[s][1]]) * entry(2, col[perms[s][2]]);
          det += s < 3 ? term : -term;
        }
        coords.push_back(det);
      }
  std::vector<std::string> pnames;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c) pnames.push_back("m" + std::to_string(r) + std::to_string(c));
  g.set_parametrization({params, std::move(coords), std::move(pnames)});
  return g;
}

Polynomial plucker_u(const Ring& ring, int a, int b) {
  require_plucker_ring(ring);
  std::array<int, 3> rest{};
  for (int i = 1, u = 0; i <= 5; ++i)
    if (i != a && i != b) rest[static_cast<std::size_t>(u++)] = i;
  return plucker(ring, {0, a, b}) + plucker(ring, rest);
}

Polynomial plucker_v(const Ring& ring, int a, int b) {
  require_plucker_ring(ring);
  std::array<int, 3> rest{};
  for (int i = 1, u = 0; i <= 5; ++i)
    if (i != a && i != b) rest[static_cast<std::size_t>(u++)] = i;
  return plucker(ring, {0, a, b}) - plucker(ring, rest);
}

std::vector<Polynomial> g25_w_forms(const Ring& ring) {
  std::vector<Polynomial> w;
  for (int a = 2; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) w.push_back(plucker_u(ring, a, b));
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) w.push_back(plucker_v(ring, a, b));
  return w;
}

std::vector<Polynomial> g25_lambda_forms(const Ring& ring) {
  require_plucker_ring(ring);
  auto x = [&](int i, int j, int k) { return plucker(ring, {i, j, k}); };
  auto n = [&](std::int64_t c) { return Polynomial::constant(ring, c); };
  return {
      x(0, 1, 2) - x(3, 4, 5),
      x(0, 1, 3) - x(2, 4, 5),
      x(0, 1, 4) - x(2, 3, 5),
      x(0, 1, 5) - x(2, 3, 4),
      x(0, 2, 3) - x(1, 4, 5),
      x(0, 2, 4) - x(1, 3, 5),
      x(0, 2, 5) - x(0, 3, 4),
      x(0, 3, 5) - x(1, 2, 3),
      x(0, 4, 5) + x(1, 3, 4) + x(1, 2, 4),
      x(0, 4, 5) + n(2) * x(1, 3, 4) - n(3) * x(1, 2, 4) - n(5) * x(1, 2, 5) + n(7) * x(0, 1, 2) + n(11) * x(0, 1, 3),
  };
}

MonadSpec g25_monad(const ProjectiveVariety& g25, int k) {
  const auto w = g25_w_forms(g25.ring());
  return banded_k_monad(g25, k, w);
}

MonadSpec g25_lambda_monad(const ProjectiveVariety& g25, int k) {
  const auto forms = g25_lambda_forms(g25.ring());
  return banded_k_monad(g25, k, forms);
}

}  // namespace monadlab
