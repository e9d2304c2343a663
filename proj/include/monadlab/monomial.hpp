#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monadlab/field.hpp"

namespace monadlab {

inline constexpr int kMaxVars = 32;

enum class MonomialOrder { grevlex, lex };

/// Dense exponent vector. Entries past the ring's variable count stay zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);
  static Monomial variable(int index, int power = 1);

  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  int degree() const { return static_cast<int>(degree_); }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Bit i is set when variable i occurs.
  std::uint32_t support() const;

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; `o` must divide *this.
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
};

/// Three-way comparison under `order`; positive when a > b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order, int nvars);

/// All monomials of total degree d in nvars variables, descending in `order`.
std::vector<Monomial> monomials_of_degree(int nvars, int d, MonomialOrder order);

/// Ambient polynomial ring: field, number of variables and monomial order.
struct Ring {
  Field field;
  int nvars = 0;
  MonomialOrder order = MonomialOrder::grevlex;

  Ring() = default;
  Ring(Field f, int n, MonomialOrder o = MonomialOrder::grevlex);

  friend bool operator==(const Ring&, const Ring&) = default;
  std::string describe() const;
};

}  // namespace monadlab
