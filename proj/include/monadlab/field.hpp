#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace monadlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field: GF(p) for a prime p < 2^31, or the rationals (p = 0).
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  constexpr Field() = default;
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  /// 0 selects the rationals; anything else must be a prime.
  static Field from_characteristic(std::uint32_t p) { return p == 0 ? rationals() : prime(p); }

  constexpr std::uint32_t characteristic() const { return p_; }
  constexpr bool is_rational() const { return p_ == 0; }
  std::string name() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = kDefaultPrime;
};

bool is_prime(std::uint64_t n);

/// Exact element of a Field. GF(p) residues are kept in [0, p); rationals are
/// kept in lowest terms with a positive denominator (boost does this).
class FieldElement {
 public:
  FieldElement() : FieldElement(Field{}, 0) {}
  FieldElement(Field field, std::int64_t value);
  FieldElement(Field field, const Rational& value);

  static FieldElement zero(Field f) { return FieldElement(f, 0); }
  static FieldElement one(Field f) { return FieldElement(f, 1); }

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Residue in [0, p). Only valid over GF(p).
  std::uint32_t residue() const;
  /// Residue mapped into (-p/2, p/2]. Only valid over GF(p).
  std::int64_t symmetric_lift() const;
  /// Only valid over the rationals.
  const Rational& rational() const;

  /// Integer literal or "n/d"; GF(p) elements print their symmetric lift.
  std::string to_string() const;

 private:
  Field field_;
  std::variant<std::uint32_t, Rational> value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// A square root when one exists in the field (Tonelli-Shanks over GF(p)).
std::optional<FieldElement> square_root(const FieldElement& x);

}  // namespace monadlab
