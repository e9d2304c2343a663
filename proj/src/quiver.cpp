#include "monadlab/quiver.hpp"

#include <bit>
#include <functional>
#include <map>
#include <regex>

#include "monadlab/errors.hpp"

namespace monadlab {

namespace {

struct MonomialLess {
  const Ring* ring;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, ring->order, ring->nvars) > 0; }
};

/// Coefficients of p in terms of `forms`, if p lies in their span.
std::optional<std::vector<FieldElement>> coordinates(const Polynomial& p, std::span<const Polynomial> forms) {
  const Ring& ring = p.ring();
  std::map<Monomial, std::size_t, MonomialLess> index(MonomialLess{&ring});
  for (const auto& f : forms)
    for (const auto& t : f.terms()) index.emplace(t.mono, 0);
  for (const auto& t : p.terms())
    if (!index.count(t.mono)) return std::nullopt;
  std::size_t k = 0;
  for (auto& [mono, i] : index) i = k++;
  DenseMatrix m(ring.field, index.size(), forms.size());
  for (std::size_t j = 0; j < forms.size(); ++j)
    for (const auto& t : forms[j].terms()) m(index[t.mono], j) = t.coeff;
  std::vector<FieldElement> rhs(index.size(), FieldElement::zero(ring.field));
  for (const auto& t : p.terms()) rhs[index[t.mono]] = t.coeff;
  return m.solve(rhs);
}

std::vector<DenseMatrix> extract(const PolyMatrix& m, std::span<const Polynomial> basis,
                                 std::span<const Polynomial> reduced_basis, const GroebnerBasis& gb) {
  const Field f = m.ring().field;
  std::vector<DenseMatrix> out(basis.size(), DenseMatrix(f, m.rows(), m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto coeffs = coordinates(m(r, c), basis);
      if (!coeffs) coeffs = coordinates(normal_form(m(r, c), gb), reduced_basis);
      if (!coeffs)
        throw ExtractionError("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") = " + m(r, c).to_string() +
                              " is not a combination of the basis forms");
      for (std::size_t i = 0; i < basis.size(); ++i) out[i](r, c) = (*coeffs)[i];
    }
  return out;
}

std::uint32_t image_of(std::span<const std::uint32_t> columns, std::uint32_t v) {
  std::uint32_t out = 0;
  for (; v; v &= v - 1) out ^= columns[static_cast<std::size_t>(std::countr_zero(v))];
  return out;
}

/// Columns of a GF(2) matrix as bitmasks over its rows.
std::vector<std::uint32_t> column_masks(const DenseMatrix& m) {
  std::vector<std::uint32_t> cols(m.cols(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) cols[c] |= 1u << r;
  return cols;
}

/// Echelon basis kept with distinct lowest set bits.
struct Gf2Span {
  std::vector<std::uint32_t> rows;

  std::uint32_t reduce(std::uint32_t v) const {
    for (auto r : rows)
      if (v & (r & -r)) v ^= r;
    return v;
  }
  bool insert(std::uint32_t v) {
    v = reduce(v);
    if (!v) return false;
    const std::uint32_t low = v & -v;
    for (auto& r : rows)
      if (r & low) r ^= v;
    rows.push_back(v);
    return true;
  }
};

}  // namespace

std::string DimVector::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string LambdaWeight::to_string() const {
  return "(" + std::to_string(l1) + "," + std::to_string(l2) + "," + std::to_string(l3) + ")";
}

void QuiverRep::validate() const {
  if (dims.a < 0 || dims.b < 0 || dims.c < 0) throw StructuralError("negative dimension vector");
  if (A.size() != B.size()) throw StructuralError("both sides of the quiver need the same number of arrows");
  for (const auto& m : A)
    if (m.rows() != static_cast<std::size_t>(dims.b) || m.cols() != static_cast<std::size_t>(dims.a) || !(m.field() == field))
      throw StructuralError("arrow matrix A_i must be " + std::to_string(dims.b) + "x" + std::to_string(dims.a));
  for (const auto& m : B)
    if (m.rows() != static_cast<std::size_t>(dims.c) || m.cols() != static_cast<std::size_t>(dims.b) || !(m.field() == field))
      throw StructuralError("arrow matrix B_j must be " + std::to_string(dims.c) + "x" + std::to_string(dims.b));
}

QuiverRep monad_to_rep(const MonadSpec& m, std::span<const Polynomial> basis) {
  const Ring& ring = m.variety.ring();
  for (const auto& f : basis) {
    if (!(f.ring() == ring)) throw StructuralError("basis form from another ring");
    const auto d = homogeneous_degree(f);
    if (!d || *d != m.degree) throw ArgumentError("basis form " + f.to_string() + " is not of degree " + std::to_string(m.degree));
  }
  std::vector<Polynomial> reduced;
  for (const auto& f : basis) reduced.push_back(normal_form(f, m.variety.basis()));
  QuiverRep rep{{m.a, m.b, m.c}, ring.field, extract(m.A, basis, reduced, m.variety.basis()),
                extract(m.B, basis, reduced, m.variety.basis())};
  rep.validate();
  return rep;
}

PolyMatrix assemble(std::span<const DenseMatrix> coeffs, std::span<const Polynomial> basis) {
  if (coeffs.size() != basis.size() || basis.empty()) throw StructuralError("one coefficient matrix per basis form");
  const Ring& ring = basis.front().ring();
  PolyMatrix out(ring, coeffs.front().rows(), coeffs.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t r = 0; r < out.rows(); ++r)
      for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) += basis[i].scaled(coeffs[i](r, c));
  return out;
}

RelationCheck check_relation(const QuiverRep& r) {
  r.validate();
  RelationCheck out;
  for (std::size_t i = 0; i < r.A.size(); ++i)
    for (std::size_t j = i; j < r.A.size(); ++j) {
      DenseMatrix s = r.B[i] * r.A[j];
      const DenseMatrix t = r.B[j] * r.A[i];
      for (std::size_t x = 0; x < s.rows(); ++x)
        for (std::size_t y = 0; y < s.cols(); ++y) s(x, y) += t(x, y);
      if (!s.is_zero()) {
        out.holds = false;
        out.residuals.push_back({i, j, std::move(s)});
      }
    }
  return out;
}

QuiverRep reduce_mod2(const QuiverRep& r) {
  const Field gf2 = Field::prime(2);
  auto lower = [&](const DenseMatrix& m) {
    DenseMatrix out(gf2, m.rows(), m.cols());
    for (std::size_t x = 0; x < m.rows(); ++x)
      for (std::size_t y = 0; y < m.cols(); ++y) {
        const FieldElement& e = m(x, y);
        if (!r.field.is_rational()) {
          out(x, y) = FieldElement(gf2, e.symmetric_lift());
          continue;
        }
        const Rational& q = e.rational();
        if (boost::multiprecision::denominator(q) % 2 == 0)
          throw ArgumentError("entry " + e.to_string() + " has an even denominator and no image in GF(2)");
        out(x, y) = FieldElement(gf2, q);
      }
    return out;
  };
  QuiverRep out{r.dims, gf2, {}, {}};
  for (const auto& m : r.A) out.A.push_back(lower(m));
  for (const auto& m : r.B) out.B.push_back(lower(m));
  return out;
}

std::set<DimVector> enumerate_subreps(const QuiverRep& r) {
  r.validate();
  if (r.field.characteristic() != 2) throw ArgumentError("subrepresentations are enumerated over GF(2) only");
  const int a = r.dims.a, b = r.dims.b, c = r.dims.c;
  if (b > kMaxEnumerationDim || a > 16 || c > 16)
    throw Refusal("subrepresentation enumeration is capped at b <= " + std::to_string(kMaxEnumerationDim) +
                  " (and a, c <= 16); got " + r.dims.to_string());
  std::vector<std::vector<std::uint32_t>> a_cols, b_cols;
  for (const auto& m : r.A) a_cols.push_back(column_masks(m));
  for (const auto& m : r.B) b_cols.push_back(column_masks(m));

  std::set<DimVector> out;
  auto visit = [&](const std::vector<std::uint32_t>& rows) {
    Gf2Span u2;
    for (auto v : rows) u2.insert(v);
    int max_u1 = 0;
    {
      // The vectors u with A_i u in U2 for all i form a subspace; count them.
      std::uint64_t count = 0;
      for (std::uint32_t u = 0; u < (1u << a); ++u) {
        bool inside = true;
        for (std::size_t i = 0; i < a_cols.size() && inside; ++i) inside = u2.reduce(image_of(a_cols[i], u)) == 0;
        count += inside;
      }
      max_u1 = std::countr_zero(count);
    }
    Gf2Span u3;
    for (auto v : rows)
      for (const auto& cols : b_cols) u3.insert(image_of(cols, v));
    const int min_u3 = static_cast<int>(u3.rows.size());
    for (int x = 0; x <= max_u1; ++x)
      for (int z = min_u3; z <= c; ++z) out.insert({x, static_cast<int>(rows.size()), z});
  };

  // Every subspace once, as a reduced echelon basis whose pivots are the lowest
  // set bits and whose other entries avoid pivot columns.
  for (int k = 0; k <= b; ++k) {
    std::vector<int> pivots(static_cast<std::size_t>(k));
    std::function<void(int, int)> choose = [&](int idx, int start) {
      if (idx == k) {
        std::vector<std::pair<int, int>> free_slots;  // (row, column)
        std::uint32_t pivot_mask = 0;
        for (int p : pivots) pivot_mask |= 1u << p;
        for (int row = 0; row < k; ++row)
          for (int col = pivots[static_cast<std::size_t>(row)] + 1; col < b; ++col)
            if (!(pivot_mask >> col & 1u)) free_slots.emplace_back(row, col);
        const std::uint64_t combos = std::uint64_t{1} << free_slots.size();
        std::vector<std::uint32_t> rows(static_cast<std::size_t>(k));
        for (std::uint64_t bits = 0; bits < combos; ++bits) {
          for (int row = 0; row < k; ++row) rows[static_cast<std::size_t>(row)] = 1u << pivots[static_cast<std::size_t>(row)];
          for (std::size_t s = 0; s < free_slots.size(); ++s)
            if (bits >> s & 1u) rows[static_cast<std::size_t>(free_slots[s].first)] |= 1u << free_slots[s].second;
          visit(rows);
        }
        return;
      }
      for (int p = start; p < b; ++p) {
        pivots[static_cast<std::size_t>(idx)] = p;
        choose(idx + 1, p + 1);
      }
    };
    choose(0, 0);
  }
  return out;
}

KingVerdict king_semistable(const DimVector& d, const LambdaWeight& lambda, const std::set<DimVector>& subdims) {
  const DimVector zero{};
  if (!subdims.count(zero) || !subdims.count(d))
    throw ArgumentError("subdimension set must contain (0,0,0) and " + d.to_string());
  KingVerdict v;
  if (lambda.pair(d) != 0) {
    v.violator = d;
    return v;
  }
  for (const auto& s : subdims) {
    const long long p = lambda.pair(s);
    if (p < 0 && !v.violator) v.violator = s;
    if (p == 0 && s != zero && s != d && !v.zero_pairing) v.zero_pairing = s;
  }
  v.semistable = !v.violator;
  v.stable = v.semistable && !v.zero_pairing;
  return v;
}

std::optional<LambdaWeight> find_lambda(const DimVector& d, const std::set<DimVector>& subdims, int bound) {
  if (bound < 1) throw ArgumentError("find_lambda needs bound >= 1");
  for (int l1 = -bound; l1 <= bound; ++l1)
    for (int l2 = -bound; l2 <= bound; ++l2)
      for (int l3 = -bound; l3 <= bound; ++l3) {
        if (l1 == 0 && l2 == 0 && l3 == 0) continue;
        const LambdaWeight w{l1, l2, l3};
        if (king_semistable(d, w, subdims).semistable) return w;
      }
  return std::nullopt;
}

std::set<DimVector> subdims_preset(const std::string& name) {
  static const std::regex pattern(R"(paper-c1-k([1-9][0-9]*))");
  std::smatch match;
  if (!std::regex_match(name, match, pattern)) throw ArgumentError("unknown subdimension preset '" + name + "'");
  const int k = std::stoi(match[1]);
  return {{0, 0, 0}, {0, 2 * k + 1, 1}, {0, 2 * k + 2, 1}, {1, 2 * k + 2, 1}};
}

}  // namespace monadlab
