#include "monadlab/groebner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "monadlab/errors.hpp"

namespace monadlab {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

int compare_coeff(const FieldElement& a, const FieldElement& b) {
  if (a.field().is_rational()) {
    if (a.rational() == b.rational()) return 0;
    return a.rational() < b.rational() ? -1 : 1;
  }
  if (a.residue() == b.residue()) return 0;
  return a.residue() < b.residue() ? -1 : 1;
}

Polynomial in_order(const Polynomial& p, const Ring& ring) {
  if (p.ring() == ring) return p;
  if (p.ring().field != ring.field || p.ring().nvars != ring.nvars)
    throw StructuralError("polynomial from " + p.ring().describe() + " used with " + ring.describe());
  return p.reorder(ring.order);
}

/// Replaces a list of polynomials by a row-reduced spanning set of the same
/// vector space: distinct monic leads, each lead absent from the other rows.
std::vector<Polynomial> row_reduce_polynomials(const Ring& ring, const std::vector<Polynomial>& polys) {
  std::vector<Monomial> monos;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (const auto& p : polys)
    for (const auto& t : p.terms())
      if (index.emplace(t.mono, 0).second) monos.push_back(t.mono);
  std::sort(monos.begin(), monos.end(),
            [&](const Monomial& a, const Monomial& b) { return compare(a, b, ring.order, ring.nvars) > 0; });
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;

  DenseMatrix m(ring.field, polys.size(), monos.size());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& t : polys[r].terms()) m(r, index[t.mono]) = t.coeff;
  const auto pivots = m.row_reduce();

  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (!m(r, c).is_zero()) terms.push_back({m(r, c), monos[c]});
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

struct BasisEntry {
  Polynomial poly;
  Monomial lead;
  int sugar;
};

Polynomial reduce_fully(Polynomial p, const std::vector<const BasisEntry*>& basis) {
  const Ring ring = p.ring();
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Monomial& lm = p.lead_monomial();
    const BasisEntry* divisor = nullptr;
    for (const auto* e : basis)
      if (e->lead.divides(lm)) {
        divisor = e;
        break;
      }
    if (divisor) {
      const FieldElement c = p.lead_coeff() / divisor->poly.lead_coeff();
      p = p.minus_term_times(c, lm / divisor->lead, divisor->poly);
    } else {
      remainder.push_back(p.lead());
      p = p.minus_term_times(p.lead_coeff(), Monomial{}, Polynomial::monomial(ring, FieldElement::one(ring.field), lm));
    }
  }
  return Polynomial::from_terms(ring, std::move(remainder));
}

}  // namespace

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  const auto ta = a.terms();
  const auto tb = b.terms();
  const auto& ring = a.ring();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    const int c = compare(ta[i].mono, tb[i].mono, ring.order, ring.nvars);
    if (c != 0) return c > 0;
    const int k = compare_coeff(ta[i].coeff, tb[i].coeff);
    if (k != 0) return k < 0;
  }
  return ta.size() < tb.size();
}

Ideal::Ideal(const Ring& ring, std::vector<Polynomial> generators) : ring_(ring), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (!(g.ring() == ring_)) throw StructuralError("ideal generator from " + g.ring().describe() + " in " + ring_.describe());
}

Ideal Ideal::operator+(const Ideal& o) const {
  if (!(ring_ == o.ring_)) throw StructuralError("sum of ideals in different rings");
  return with(o.gens_);
}

Ideal Ideal::with(std::span<const Polynomial> extra) const {
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(ring_, std::move(gens));
}

bool GroebnerBasis::is_unit() const { return elements_.size() == 1 && elements_.front().is_constant(); }

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order) {
  Ring ring = ideal.ring();
  ring.order = order;
  GroebnerBasis result;
  result.ring_ = ring;

  std::vector<Polynomial> input;
  for (const auto& g : ideal.generators())
    if (!g.is_zero()) input.push_back(in_order(g, ring));
  if (input.empty()) return result;
  input = row_reduce_polynomials(ring, input);

  std::vector<BasisEntry> basis;
  basis.reserve(input.size() * 2);

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
  };
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_element = [&](Polynomial p, int sugar) {
    p = p.monic();
    const std::size_t k = basis.size();
    basis.push_back({p, p.lead_monomial(), sugar});
    for (std::size_t i = 0; i < k; ++i) {
      const Monomial l = Monomial::lcm(basis[i].lead, basis[k].lead);
      const int s = std::max(basis[i].sugar + l.degree() - basis[i].lead.degree(), sugar + l.degree() - basis[k].lead.degree());
      pairs.push_back({i, k, l, s});
      pending.emplace(i, k);
    }
  };

  for (auto& p : input) {
    if (p.is_constant()) {
      result.elements_ = {Polynomial::constant(ring, 1)};
      return result;
    }
    const int d = p.total_degree();
    add_element(std::move(p), d);
  }

  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      if (it->sugar != best->sugar) {
        if (it->sugar < best->sugar) best = it;
        continue;
      }
      const int c = compare(it->lcm, best->lcm, ring.order, ring.nvars);
      if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
    }
    const Pair pair = *best;
    *best = pairs.back();
    pairs.pop_back();
    pending.erase({pair.i, pair.j});

    const auto& bi = basis[pair.i];
    const auto& bj = basis[pair.j];
    if (bi.lead.coprime(bj.lead)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = basis[k].lead.divides(pair.lcm) && !is_pending(pair.i, k) && !is_pending(pair.j, k);
    }
    if (chain) continue;

    const FieldElement one = FieldElement::one(ring.field);
    Polynomial s = bi.poly.times_term(one, pair.lcm / bi.lead).minus_term_times(one, pair.lcm / bj.lead, bj.poly);
    std::vector<const BasisEntry*> view;
    view.reserve(basis.size());
    for (const auto& e : basis) view.push_back(&e);
    Polynomial r = reduce_fully(std::move(s), view);
    if (r.is_zero()) continue;
    if (r.is_constant()) {
      result.elements_ = {Polynomial::constant(ring, 1)};
      return result;
    }
    add_element(std::move(r), pair.sugar);
  }

  // Minimalize: drop entries whose lead is divisible by another kept lead.
  std::vector<std::size_t> order_idx(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    const int c = compare(basis[a].lead, basis[b].lead, ring.order, ring.nvars);
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<const BasisEntry*> kept;
  for (auto idx : order_idx) {
    bool redundant = false;
    for (const auto* k : kept)
      if (k->lead.divides(basis[idx].lead)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(&basis[idx]);
  }

  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<const BasisEntry*> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    result.elements_.push_back(reduce_fully(kept[i]->poly, others).monic());
  }
  std::sort(result.elements_.begin(), result.elements_.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.lead_monomial(), b.lead_monomial(), ring.order, ring.nvars) > 0;
  });
  return result;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
  Polynomial q = in_order(p, basis.ring());
  std::vector<BasisEntry> entries;
  entries.reserve(basis.elements().size());
  for (const auto& g : basis.elements()) entries.push_back({g, g.lead_monomial(), 0});
  std::vector<const BasisEntry*> view;
  for (const auto& e : entries) view.push_back(&e);
  return reduce_fully(std::move(q), view);
}

bool ideal_contains(const GroebnerBasis& basis, const Polynomial& p) { return normal_form(p, basis).is_zero(); }

int krull_dimension(const GroebnerBasis& basis) {
  const int n = basis.ring().nvars;
  if (basis.is_unit()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& g : basis.elements()) supports.push_back(g.lead_monomial().support());
  // Only minimal supports matter.
  std::sort(supports.begin(), supports.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint32_t> minimal;
  for (auto s : supports) {
    bool dominated = false;
    for (auto m : minimal)
      if ((m & s) == m) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(s);
  }

  int best = 0;
  std::function<void(int, std::uint32_t, int)> search = [&](int var, std::uint32_t chosen, int size) {
    if (size + (n - var) <= best) return;
    if (var == n) {
      best = size;
      return;
    }
    const std::uint32_t with = chosen | (1u << var);
    bool ok = true;
    for (auto m : minimal)
      if ((m & with) == m) {
        ok = false;
        break;
      }
    if (ok) search(var + 1, with, size + 1);
    search(var + 1, chosen, size);
  };
  search(0, 0, 0);
  return best;
}

std::int64_t hilbert_value(const GroebnerBasis& basis, int d) {
  if (d < 0) throw ArgumentError("hilbert_value needs a nonnegative degree, got " + std::to_string(d));
  if (basis.is_unit()) return 0;
  std::int64_t count = 0;
  for (const auto& m : monomials_of_degree(basis.ring().nvars, d, basis.order())) {
    bool standard = true;
    for (const auto& g : basis.elements())
      if (g.lead_monomial().divides(m)) {
        standard = false;
        break;
      }
    count += standard;
  }
  return count;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Ideal minors_ideal(const PolyMatrix& m, int t, std::size_t cap) {
  const auto rows = m.rows(), cols = m.cols();
  if (t < 1 || static_cast<std::size_t>(t) > std::min(rows, cols))
    throw ArgumentError("minor size " + std::to_string(t) + " outside [1, " + std::to_string(std::min(rows, cols)) + "]");
  const auto tt = static_cast<std::size_t>(t);
  const auto count = binomial(rows, tt) * binomial(cols, tt);
  if (count > cap)
    throw Refusal("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " has " + std::to_string(count) +
                  " minors of size " + std::to_string(t) + ", above the cap of " + std::to_string(cap));
  if (cols > 63 || rows > 63) throw Refusal("matrix too large for minor expansion");

  // Expand along one side, dynamic programming over subsets of the other.
  auto dp_cost = [&](std::size_t outer, std::size_t inner) {
    std::uint64_t c = 0;
    for (std::size_t k = 1; k <= tt; ++k) c += k * binomial(inner, k);
    return binomial(outer, tt) * c;
  };
  const bool transpose = dp_cost(cols, rows) < dp_cost(rows, cols);
  const PolyMatrix a = transpose ? m.transpose() : m;
  const Ring& ring = m.ring();

  std::vector<Polynomial> minors;
  for_each_subset(a.rows(), tt, [&](const std::vector<std::size_t>& rowset) {
    std::unordered_map<std::uint64_t, Polynomial> prev;
    prev.emplace(0, Polynomial::constant(ring, 1));
    for (std::size_t k = 1; k <= tt; ++k) {
      std::unordered_map<std::uint64_t, Polynomial> next;
      const std::size_t r = rowset[k - 1];
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& colset) {
        std::uint64_t mask = 0;
        for (auto c : colset) mask |= std::uint64_t{1} << c;
        Polynomial acc(ring);
        for (std::size_t pos = 0; pos < k; ++pos) {
          const auto& entry = a(r, colset[pos]);
          if (entry.is_zero()) continue;
          const auto& sub = prev.at(mask & ~(std::uint64_t{1} << colset[pos]));
          if (sub.is_zero()) continue;
          Polynomial term = entry * sub;
          if ((pos + k - 1) % 2) term = -term;
          acc += term;
        }
        next.emplace(mask, std::move(acc));
      });
      prev = std::move(next);
    }
    for (auto& [mask, minor] : prev)
      if (!minor.is_zero()) minors.push_back(minor.monic());
  });

  std::sort(minors.begin(), minors.end(), canonical_less);
  minors.erase(std::unique(minors.begin(), minors.end()), minors.end());
  return Ideal(ring, std::move(minors));
}

bool vanishes_on_zero_set(const Ideal& ideal, const Polynomial& g) {
  const Ring& ring = ideal.ring();
  if (ring.nvars + 1 > kMaxVars) throw Refusal("no room for the auxiliary variable");
  const Ring bigger(ring.field, ring.nvars + 1, MonomialOrder::grevlex);
  std::vector<Polynomial> gens;
  for (const auto& p : ideal.generators()) gens.push_back(p.embed(bigger));
  const Polynomial s = Polynomial::variable(bigger, ring.nvars);
  gens.push_back(Polynomial::constant(bigger, 1) - s * in_order(g, ring).embed(bigger));
  return buchberger(Ideal(bigger, std::move(gens))).is_unit();
}

}  // namespace monadlab
