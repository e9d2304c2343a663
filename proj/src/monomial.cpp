#include "monadlab/monomial.hpp"

#include <algorithm>
#include <functional>

#include "monadlab/errors.hpp"

namespace monadlab {

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars)) throw ArgumentError("at most 32 variables are supported");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 0xffff) throw ArgumentError("exponent out of range");
    exps_[i] = static_cast<std::uint16_t>(exponents[i]);
    degree_ += exps_[i];
  }
}

Monomial Monomial::variable(int index, int power) {
  if (index < 0 || index >= kMaxVars) throw ArgumentError("variable index out of range");
  Monomial m;
  m.exps_[static_cast<std::size_t>(index)] = static_cast<std::uint16_t>(power);
  m.degree_ = static_cast<std::uint32_t>(power);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i]) mask |= 1u << i;
  return mask;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = static_cast<std::uint16_t>(exps_[i] + o.exps_[i]);
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - o.exps_[i]);
  r.degree_ = degree_ - o.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = degree_;
  for (auto e : exps_) h = h * 1000003u ^ e;
  return h;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order, int nvars) {
  if (order == MonomialOrder::grevlex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = nvars - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }
  for (int i = 0; i < nvars; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d, MonomialOrder order) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(var)] = k;
      rec(var + 1, left - k);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return compare(a, b, order, nvars) > 0; });
  return out;
}

Ring::Ring(Field f, int n, MonomialOrder o) : field(f), nvars(n), order(o) {
  if (n < 0 || n > kMaxVars) throw ArgumentError("variable count must be in [0, 32], got " + std::to_string(n));
}

std::string Ring::describe() const {
  return field.name() + "[" + std::to_string(nvars) + " vars, " + (order == MonomialOrder::grevlex ? "grevlex" : "lex") + "]";
}

}  // namespace monadlab
