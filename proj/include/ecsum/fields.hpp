/*
 * Copyright 2026 The ecsum Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Exact arithmetic in prime fields F_p (p <= 2^31) and binary fields
// F_{2^n} (n <= 24), together with the additive characters of those fields.
//
// Field elements are passed around as their canonical representative
// (`Elem`): an integer in [0, p) for prime fields, or a polynomial bitmask of
// degree < n for binary fields. `Field` carries the arithmetic; `FieldElement`
// is a checked wrapper that remembers its field and rejects mixed-field
// arithmetic.

#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ecsum/error.hpp"
#include "ecsum/numtheory.hpp"

namespace ecsum {

using Elem = std::uint32_t;
using Complex = std::complex<double>;

enum class FieldKind { kPrime, kBinary };

inline constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;
inline constexpr unsigned kMaxBinaryDegree = 24;

namespace detail {

// Carry-less product of two polynomials over F_2 of degree < 32.
inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

inline int poly_degree(std::uint64_t a) {
  return a == 0 ? -1 : 63 - std::countl_zero(a);
}

inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
    a ^= m << (da - dm);
  }
  return a;
}

}  // namespace detail

// True iff `poly` (bitmask including the leading x^n term) is irreducible over
// F_2. Exhaustive trial division by every polynomial of degree <= n/2.
inline bool is_irreducible_gf2(std::uint64_t poly) {
  const int n = detail::poly_degree(poly);
  if (n < 1) return false;
  if (n == 1) return true;
  for (std::uint64_t d = 2; detail::poly_degree(d) <= n / 2; ++d) {
    if (detail::poly_mod(poly, d) == 0) return false;
  }
  return true;
}

// The numerically smallest irreducible polynomial of degree n.
inline std::uint32_t default_irreducible(unsigned n) {
  for (std::uint64_t p = (std::uint64_t{1} << n) | 1;
       p < (std::uint64_t{1} << (n + 1)); p += 2) {
    if (is_irreducible_gf2(p)) return static_cast<std::uint32_t>(p);
  }
  throw Error(ErrorKind::kInvalidField, "no irreducible polynomial found");
}

// exp(2*pi*i*k/n). The angle is reduced to an octant with exact integer
// arithmetic so that the only rounding comes from one sin/cos pair on
// [0, pi/4]; quarter-turn rotations are exact.
inline Complex unit_root(std::uint64_t k, std::uint64_t n) {
  k %= n;
  const unsigned __int128 t = static_cast<unsigned __int128>(k) * 8;
  const auto octant = static_cast<unsigned>(t / n);
  const auto rem = static_cast<std::uint64_t>(t % n);
  constexpr double kEighth = std::numbers::pi / 4.0;
  double c = 0.0;
  double s = 0.0;
  unsigned quarter = 0;
  if (octant % 2 == 0) {
    const double theta = kEighth * (static_cast<double>(rem) / n);
    c = std::cos(theta);
    s = std::sin(theta);
    quarter = octant / 2;
  } else {
    const double theta = kEighth * (static_cast<double>(n - rem) / n);
    c = std::cos(theta);
    s = -std::sin(theta);
    quarter = (octant + 1) / 2;
  }
  switch (quarter % 4) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

class Field {
 public:
  // F_p for a prime 3 <= p <= 2^31.
  static Field prime(std::uint64_t p) {
    if (p < 3 || p > kMaxPrime || !is_prime(p)) {
      throw Error(ErrorKind::kInvalidField,
                  "prime field needs a prime 3 <= p <= 2^31, got " +
                      std::to_string(p));
    }
    return Field(FieldKind::kPrime, static_cast<std::uint32_t>(p), 1, 0);
  }

  // F_{2^n} = F_2[x]/(poly); poly includes the x^n bit.
  static Field binary(unsigned n, std::uint64_t poly) {
    if (n < 1 || n > kMaxBinaryDegree) {
      throw Error(ErrorKind::kInvalidField,
                  "binary field degree must be in [1, 24], got " +
                      std::to_string(n));
    }
    if (detail::poly_degree(poly) != static_cast<int>(n) ||
        !is_irreducible_gf2(poly)) {
      throw Error(ErrorKind::kInvalidField,
                  "reduction polynomial " + std::to_string(poly) +
                      " is not an irreducible polynomial of degree " +
                      std::to_string(n));
    }
    return Field(FieldKind::kBinary, 2, n, static_cast<std::uint32_t>(poly));
  }

  static Field binary(unsigned n) {
    if (n < 1 || n > kMaxBinaryDegree) {
      throw Error(ErrorKind::kInvalidField,
                  "binary field degree must be in [1, 24], got " +
                      std::to_string(n));
    }
    return binary(n, default_irreducible(n));
  }

  FieldKind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == FieldKind::kPrime; }
  bool is_binary_field() const { return kind_ == FieldKind::kBinary; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint32_t reduction_poly() const { return poly_; }

  // q, the number of elements.
  std::uint64_t size() const {
    return is_prime_field() ? p_ : (std::uint64_t{1} << n_);
  }

  bool contains(Elem x) const { return x < size(); }

  // Canonical image of an integer (binary fields take the bitmask reduced
  // modulo the reduction polynomial).
  Elem from_int(std::int64_t v) const {
    if (is_prime_field()) {
      std::int64_t r = v % static_cast<std::int64_t>(p_);
      if (r < 0) r += p_;
      return static_cast<Elem>(r);
    }
    return static_cast<Elem>(
        detail::poly_mod(static_cast<std::uint64_t>(v), poly_));
  }

  Elem add(Elem x, Elem y) const {
    if (is_binary_field()) return x ^ y;
    const std::uint64_t s = std::uint64_t{x} + y;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }

  Elem neg(Elem x) const {
    if (is_binary_field()) return x;
    return x == 0 ? 0 : p_ - x;
  }

  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

  Elem mul(Elem x, Elem y) const {
    if (is_prime_field()) return reduce(std::uint64_t{x} * y);
    return static_cast<Elem>(detail::poly_mod(detail::clmul(x, y), poly_));
  }

  Elem sqr(Elem x) const { return mul(x, x); }

  Elem pow(Elem x, std::uint64_t e) const {
    Elem result = 1;
    while (e > 0) {
      if (e & 1) result = mul(result, x);
      x = mul(x, x);
      e >>= 1;
    }
    return result;
  }

  Elem inv(Elem x) const {
    if (x == 0) throw Error(ErrorKind::kDivisionByZero, "inverse of zero");
    if (inverses_) return (*inverses_)[x];
    if (is_binary_field()) return pow(x, size() - 2);
    // Extended Euclid on (p, x).
    std::int64_t r0 = p_, r1 = x, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::int64_t tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    if (t0 < 0) t0 += p_;
    return static_cast<Elem>(t0);
  }

  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

  // Euler criterion value x^((p-1)/2): 1 for nonzero squares, p-1 otherwise.
  Elem euler_criterion(Elem x) const {
    require_prime("euler_criterion");
    return pow(x, (p_ - 1) / 2);
  }

  bool is_square(Elem x) const {
    require_prime("is_square");
    return x == 0 || euler_criterion(x) == 1;
  }

  // Square root by Tonelli-Shanks; returns the root with the smaller canonical
  // representative. Throws NonResidueError for non-squares.
  Elem sqrt(Elem x) const {
    require_prime("sqrt");
    if (auto r = try_sqrt(x)) return *r;
    throw NonResidueError(x, euler_criterion(x));
  }

  std::optional<Elem> try_sqrt(Elem x) const {
    require_prime("sqrt");
    if (x == 0) return Elem{0};
    if (euler_criterion(x) != 1) return std::nullopt;
    std::uint64_t q = p_ - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    Elem z = 2;
    while (euler_criterion(z) != p_ - 1) ++z;
    Elem c = pow(z, q);
    Elem r = pow(x, (q + 1) / 2);
    Elem t = pow(x, q);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      for (Elem tt = t; tt != 1; tt = sqr(tt)) ++i;
      Elem b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = sqr(b);
      m = i;
      c = sqr(b);
      t = mul(t, c);
      r = mul(r, b);
    }
    const Elem other = neg(r);
    return std::min(r, other);
  }

  // Absolute trace F_{2^n} -> F_2.
  Elem trace(Elem x) const {
    if (!is_binary_field()) {
      throw Error(ErrorKind::kUnsupportedField,
                  "trace is only defined here for binary fields");
    }
    Elem t = 0;
    Elem y = x;
    for (unsigned i = 0; i < n_; ++i) {
      t ^= y;
      y = sqr(y);
    }
    return t;
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.n_ == b.n_ && a.poly_ == b.poly_;
  }

  std::string describe() const {
    if (is_prime_field()) return "F_" + std::to_string(p_);
    return "F_2^" + std::to_string(n_) + "[" + std::to_string(poly_) + "]";
  }

 private:
  // Fields up to this size carry a shared table of inverses.
  static constexpr std::uint64_t kInverseTableMax = std::uint64_t{1} << 16;

  Field(FieldKind kind, std::uint32_t p, unsigned n, std::uint32_t poly)
      : kind_(kind),
        p_(p),
        n_(n),
        poly_(poly),
        barrett_(kind == FieldKind::kPrime ? ~std::uint64_t{0} / p : 0) {
    if (size() > kInverseTableMax || (is_binary_field() && n_ > 10)) return;
    auto table = std::make_shared<std::vector<Elem>>(size(), 0);
    auto& inv = *table;
    if (is_prime_field()) {
      if (size() > 1) inv[1] = 1;
      for (Elem i = 2; i < p_; ++i) {
        inv[i] = static_cast<Elem>(p_ - std::uint64_t{p_ / i} * inv[p_ % i] % p_);
      }
    } else {
      for (Elem i = 1; i < size(); ++i) inv[i] = pow(i, size() - 2);
    }
    inverses_ = std::move(table);
  }

  // x mod p for x < 2^64, by Barrett reduction.
  Elem reduce(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    if (r >= p_) r -= p_;
    return static_cast<Elem>(r);
  }

  void require_prime(const char* what) const {
    if (!is_prime_field()) {
      throw Error(ErrorKind::kUnsupportedField,
                  std::string(what) + " requires a prime field");
    }
  }

  FieldKind kind_;
  std::uint32_t p_;
  unsigned n_;
  std::uint32_t poly_;
  std::uint64_t barrett_;
  std::shared_ptr<const std::vector<Elem>> inverses_;
};

// Checked element: arithmetic between elements of different fields throws
// FieldMismatch.
class FieldElement {
 public:
  FieldElement(const Field& field, Elem repr) : field_(field), repr_(repr) {
    if (!field.contains(repr)) {
      throw Error(ErrorKind::kParameterError,
                  "representative " + std::to_string(repr) +
                      " is not canonical in " + field.describe());
    }
  }

  static FieldElement from_int(const Field& field, std::int64_t v) {
    return FieldElement(field, field.from_int(v));
  }

  const Field& field() const { return field_; }
  Elem repr() const { return repr_; }
  bool is_zero() const { return repr_ == 0; }

  FieldElement operator+(const FieldElement& o) const {
    return {field_, field_.add(repr_, same(o).repr_)};
  }
  FieldElement operator-(const FieldElement& o) const {
    return {field_, field_.sub(repr_, same(o).repr_)};
  }
  FieldElement operator-() const { return {field_, field_.neg(repr_)}; }
  FieldElement operator*(const FieldElement& o) const {
    return {field_, field_.mul(repr_, same(o).repr_)};
  }
  FieldElement operator/(const FieldElement& o) const {
    return {field_, field_.div(repr_, same(o).repr_)};
  }
  FieldElement inv() const { return {field_, field_.inv(repr_)}; }
  FieldElement pow(std::uint64_t e) const {
    return {field_, field_.pow(repr_, e)};
  }
  FieldElement sqrt() const { return {field_, field_.sqrt(repr_)}; }
  FieldElement trace() const { return {field_, field_.trace(repr_)}; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  const FieldElement& same(const FieldElement& o) const {
    if (!(o.field_ == field_)) {
      throw Error(ErrorKind::kFieldMismatch,
                  field_.describe() + " vs " + o.field_.describe());
    }
    return o;
  }

  Field field_;
  Elem repr_;
};

// psi_1 evaluated at every field element, shared between the characters
// psi_a(x) = psi_1(a x) of one field.
struct CharacterTable {
  std::vector<Complex> values;
};

// Nonprincipal additive character psi_a(x) = e(Tr(a x) / p).
class AdditiveCharacter {
 public:
  static constexpr std::uint64_t kTableThreshold = std::uint64_t{1} << 20;

  AdditiveCharacter(const Field& field, Elem a)
      : AdditiveCharacter(field, a, make_table(field)) {}

  AdditiveCharacter(const Field& field, Elem a,
                    std::shared_ptr<const CharacterTable> table)
      : field_(field), a_(a), table_(std::move(table)) {
    if (!field.contains(a)) {
      throw Error(ErrorKind::kParameterError, "character index out of range");
    }
    if (a == 0) {
      throw Error(ErrorKind::kPrincipalCharacterForbidden,
                  "additive character index must be nonzero");
    }
  }

  static std::shared_ptr<const CharacterTable> make_table(const Field& field) {
    if (field.size() > kTableThreshold) return nullptr;
    auto table = std::make_shared<CharacterTable>();
    table->values.resize(field.size());
    for (std::uint64_t y = 0; y < field.size(); ++y) {
      table->values[y] = direct_value(field, static_cast<Elem>(y));
    }
    return table;
  }

  // The same field with multiplier a*b, sharing the value table.
  AdditiveCharacter scaled(Elem b) const {
    return AdditiveCharacter(field_, field_.mul(a_, b), table_);
  }

  const Field& field() const { return field_; }
  Elem index() const { return a_; }

  Complex operator()(Elem x) const {
    const Elem y = field_.mul(a_, x);
    if (table_) return table_->values[y];
    return direct_value(field_, y);
  }

  // +1 or -1; binary fields only.
  int sign(Elem x) const {
    return field_.trace(field_.mul(a_, x)) == 0 ? 1 : -1;
  }

 private:
  static Complex direct_value(const Field& field, Elem y) {
    if (field.is_prime_field()) return unit_root(y, field.characteristic());
    return field.trace(y) == 0 ? Complex(1.0, 0.0) : Complex(-1.0, 0.0);
  }

  Field field_;
  Elem a_;
  std::shared_ptr<const CharacterTable> table_;
};

// Every nonprincipal additive character of `field`, ordered by index.
inline std::vector<AdditiveCharacter> all_additive_characters(
    const Field& field) {
  auto table = AdditiveCharacter::make_table(field);
  std::vector<AdditiveCharacter> out;
  out.reserve(field.size() - 1);
  for (std::uint64_t a = 1; a < field.size(); ++a) {
    out.emplace_back(field, static_cast<Elem>(a), table);
  }
  return out;
}

}  // namespace ecsum
