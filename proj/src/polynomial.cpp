#include "monadlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "monadlab/errors.hpp"

namespace monadlab {

Polynomial Polynomial::constant(const Ring& ring, const FieldElement& c) {
  if (c.field() != ring.field) throw StructuralError("constant from another field");
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({c, Monomial{}});
  return p;
}

Polynomial Polynomial::constant(const Ring& ring, std::int64_t c) { return constant(ring, FieldElement(ring.field, c)); }

Polynomial Polynomial::variable(const Ring& ring, int index) {
  if (index < 0 || index >= ring.nvars) throw ArgumentError("variable index out of range");
  return monomial(ring, FieldElement::one(ring.field), Monomial::variable(index));
}

Polynomial Polynomial::monomial(const Ring& ring, const FieldElement& c, const Monomial& m) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.coeff.field() != ring.field) throw StructuralError("term coefficient from another field");
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare(a.mono, b.mono, ring.order, ring.nvars) > 0;
  });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  }
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (!(ring_ == o.ring_)) throw StructuralError("polynomials from different rings: " + ring_.describe() + " vs " + o.ring_.describe());
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_compatible(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    const int cmp = compare(a->mono, b->mono, ring_.order, ring_.nvars);
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back(*b++);
    } else {
      auto c = a->coeff + b->coeff;
      if (!c.is_zero()) out.push_back({std::move(c), a->mono});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != o.terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.coeff * t.coeff, s.mono * t.mono});
  return Polynomial::from_terms(a.ring_, std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const FieldElement& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
  return r;
}

Polynomial Polynomial::minus_term_times(const FieldElement& c, const Monomial& m, const Polynomial& g) const {
  require_compatible(g);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  const FieldElement neg = -c;
  while (a != terms_.end() && b != g.terms_.end()) {
    const Monomial bm = b->mono * m;
    const int cmp = compare(a->mono, bm, ring_.order, ring_.nvars);
    if (cmp > 0) {
      r.terms_.push_back(*a++);
    } else if (cmp < 0) {
      r.terms_.push_back({b->coeff * neg, bm});
      ++b;
    } else {
      auto s = a->coeff + b->coeff * neg;
      if (!s.is_zero()) r.terms_.push_back({std::move(s), bm});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) r.terms_.push_back(*a);
  for (; b != g.terms_.end(); ++b) r.terms_.push_back({b->coeff * neg, b->mono * m});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lead_coeff().is_one()) return *this;
  return scaled(lead_coeff().inverse());
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, 1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != static_cast<std::size_t>(ring_.nvars))
    throw StructuralError("evaluation point has " + std::to_string(point.size()) + " coordinates, ring has " +
                          std::to_string(ring_.nvars) + " variables");
  for (const auto& x : point)
    if (x.field() != ring_.field) throw StructuralError("evaluation point from another field");
  FieldElement sum = FieldElement::zero(ring_.field);
  for (const auto& t : terms_) {
    FieldElement v = t.coeff;
    for (int i = 0; i < ring_.nvars && !v.is_zero(); ++i)
      if (t.mono[i]) v *= point[static_cast<std::size_t>(i)].pow(static_cast<std::uint64_t>(t.mono[i]));
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::embed(const Ring& bigger) const {
  if (bigger.field != ring_.field || bigger.nvars < ring_.nvars) throw StructuralError("cannot embed into " + bigger.describe());
  return from_terms(bigger, terms_);
}

Polynomial Polynomial::reorder(MonomialOrder order) const {
  Ring r = ring_;
  r.order = order;
  return from_terms(r, terms_);
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  std::vector<std::string> fallback;
  if (names.empty()) {
    fallback = default_variable_names(ring_.nvars);
    names = fallback;
  }
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (c != "1" || t.mono.is_one()) {
      os << c;
      wrote = true;
    }
    for (int i = 0; i < ring_.nvars; ++i) {
      if (!t.mono[i]) continue;
      if (wrote) os << '*';
      os << names[static_cast<std::size_t>(i)];
      if (t.mono[i] > 1) os << '^' << t.mono[i];
      wrote = true;
    }
  }
  return os.str();
}

std::optional<int> homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) return kAnyDegree;
  const int d = p.lead_monomial().degree();
  for (const auto& t : p.terms())
    if (t.mono.degree() != d) return std::nullopt;
  return d;
}

std::vector<std::string> default_variable_names(int nvars, const std::string& stem) {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

}  // namespace monadlab
