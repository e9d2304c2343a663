#include "monadlab/field.hpp"

#include "monadlab/errors.hpp"

namespace monadlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw ArgumentError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const { return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  auto r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

void require_same(Field a, Field b) {
  if (a != b) throw StructuralError("field mismatch: " + a.name() + " vs " + b.name());
}

}  // namespace

FieldElement::FieldElement(Field field, std::int64_t value) : field_(field) {
  if (field.is_rational())
    value_ = Rational(value);
  else
    value_ = reduce(value, field.characteristic());
}

FieldElement::FieldElement(Field field, const Rational& value) : field_(field) {
  if (field.is_rational()) {
    value_ = value;
    return;
  }
  const auto p = field.characteristic();
  Integer num = boost::multiprecision::numerator(value) % p;
  Integer den = boost::multiprecision::denominator(value) % p;
  if (den == 0) throw ArgumentError("denominator vanishes in " + field.name());
  if (num < 0) num += p;
  const auto n = num.convert_to<std::uint64_t>();
  const auto d = den.convert_to<std::uint64_t>();
  value_ = static_cast<std::uint32_t>(n * pow_mod(d, p - 2, p) % p);
}

bool FieldElement::is_zero() const {
  if (field_.is_rational()) return std::get<Rational>(value_) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool FieldElement::is_one() const {
  if (field_.is_rational()) return std::get<Rational>(value_) == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (field_.is_rational()) {
    std::get<Rational>(r.value_) = -std::get<Rational>(value_);
  } else {
    const auto v = std::get<std::uint32_t>(value_);
    std::get<std::uint32_t>(r.value_) = v == 0 ? 0 : field_.characteristic() - v;
  }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same(field_, o.field_);
  if (field_.is_rational()) {
    std::get<Rational>(value_) += std::get<Rational>(o.value_);
  } else {
    auto& v = std::get<std::uint32_t>(value_);
    std::uint64_t s = std::uint64_t{v} + std::get<std::uint32_t>(o.value_);
    if (s >= field_.characteristic()) s -= field_.characteristic();
    v = static_cast<std::uint32_t>(s);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same(field_, o.field_);
  if (field_.is_rational()) {
    std::get<Rational>(value_) *= std::get<Rational>(o.value_);
  } else {
    auto& v = std::get<std::uint32_t>(value_);
    v = static_cast<std::uint32_t>(std::uint64_t{v} * std::get<std::uint32_t>(o.value_) % field_.characteristic());
  }
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ArgumentError("division by zero in " + field_.name());
  FieldElement r = *this;
  if (field_.is_rational()) {
    std::get<Rational>(r.value_) = 1 / std::get<Rational>(value_);
  } else {
    const auto p = field_.characteristic();
    std::get<std::uint32_t>(r.value_) = pow_mod(std::get<std::uint32_t>(value_), p - 2, p);
  }
  return r;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  require_same(field_, o.field_);
  return *this *= o.inverse();
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement r = one(field_), base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) { return a.field_ == b.field_ && a.value_ == b.value_; }

std::uint32_t FieldElement::residue() const {
  if (field_.is_rational()) throw StructuralError("residue() on a rational element");
  return std::get<std::uint32_t>(value_);
}

std::int64_t FieldElement::symmetric_lift() const {
  const std::int64_t v = residue();
  const std::int64_t p = field_.characteristic();
  return v > p / 2 ? v - p : v;
}

const Rational& FieldElement::rational() const {
  if (!field_.is_rational()) throw StructuralError("rational() on a GF(p) element");
  return std::get<Rational>(value_);
}

std::string FieldElement::to_string() const {
  if (field_.is_rational()) return std::get<Rational>(value_).str();
  return std::to_string(symmetric_lift());
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

std::optional<FieldElement> square_root(const FieldElement& x) {
  const Field f = x.field();
  if (x.is_zero()) return x;
  if (f.is_rational()) {
    const Rational& q = x.rational();
    if (q < 0) return std::nullopt;
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    const Integer rn = boost::multiprecision::sqrt(num);
    const Integer rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return FieldElement(f, Rational(rn, rd));
  }
  const std::uint64_t p = f.characteristic();
  if (p == 2) return x;
  if (!x.pow((p - 1) / 2).is_one()) return std::nullopt;
  // p - 1 = q * 2^s with q odd.
  std::uint64_t q = p - 1;
  int s = 0;
  while (q % 2 == 0) q /= 2, ++s;
  FieldElement z(f, 2);
  while (z.pow((p - 1) / 2).is_one()) z += FieldElement::one(f);
  FieldElement c = z.pow(q);
  FieldElement r = x.pow((q + 1) / 2);
  FieldElement t = x.pow(q);
  int m = s;
  while (!t.is_one()) {
    int i = 0;
    FieldElement t2 = t;
    while (!t2.is_one()) t2 *= t2, ++i;
    FieldElement b = c;
    for (int j = 0; j < m - i - 1; ++j) b *= b;
    r *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  return r;
}

}  // namespace monadlab
