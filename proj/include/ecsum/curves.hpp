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

// Elliptic curves over the fields of fields.hpp: three curve models, the
// affine chord-tangent group law, exhaustive point enumeration and the group
// structure E(F_q) = Z_M x Z_L with an explicit coordinate table.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ecsum/error.hpp"
#include "ecsum/fields.hpp"
#include "ecsum/limits.hpp"
#include "ecsum/numtheory.hpp"

namespace ecsum {

// Affine point or the point at infinity O. Points order as O first, then by
// x, then by y (canonical representatives).
class Point {
 public:
  constexpr Point() = default;
  static constexpr Point infinity() { return Point(); }
  static constexpr Point affine(Elem x, Elem y) { return Point(x, y); }

  constexpr bool is_infinity() const { return inf_; }
  constexpr Elem x() const { return x_; }
  constexpr Elem y() const { return y_; }

  // Injective 64-bit key consistent with the canonical order.
  constexpr std::uint64_t key() const {
    return inf_ ? 0 : ((std::uint64_t{x_} + 1) << 32) | y_;
  }

  friend constexpr bool operator==(const Point& a, const Point& b) {
    return a.key() == b.key();
  }
  friend constexpr auto operator<=>(const Point& a, const Point& b) {
    return a.key() <=> b.key();
  }

 private:
  constexpr Point(Elem x, Elem y) : inf_(false), x_(x), y_(y) {}

  bool inf_ = true;
  Elem x_ = 0;
  Elem y_ = 0;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    std::uint64_t z = p.key() + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};

// "x:y" or "inf", with decimal canonical representatives.
inline std::string to_string(const Point& p) {
  if (p.is_infinity()) return "inf";
  return std::to_string(p.x()) + ":" + std::to_string(p.y());
}

enum class CurveVariant { kOddWeierstrass, kKoblitz, kGlv };

inline std::string_view to_string(CurveVariant v) {
  switch (v) {
    case CurveVariant::kOddWeierstrass: return "odd_weierstrass";
    case CurveVariant::kKoblitz: return "koblitz";
    case CurveVariant::kGlv: return "glv";
  }
  return "unknown";
}

// Curve description. Odd characteristic curves (including the GLV curve) are
// Y^2 = X^3 + a2 X^2 + a4 X + a6; Koblitz curves are
// Y^2 + XY = X^3 + a X^2 + 1 over F_{2^n}.
struct CurveSpec {
  CurveVariant variant = CurveVariant::kOddWeierstrass;
  Field field = Field::prime(3);
  Elem a2 = 0;
  Elem a4 = 0;
  Elem a6 = 0;
  // Koblitz coefficient a in {0, 1}.
  unsigned koblitz_a = 0;
  // GLV parameters: xi^2 = -7, b = (1 + xi)/2, c = (b - 3)/4.
  Elem xi = 0;
  Elem glv_b = 0;
  Elem glv_c = 0;

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

class Curve {
 public:
  // Y^2 = X^3 + a2 X^2 + a4 X + a6 over F_p. Requires p >= 5 when a2 = 0.
  static Curve weierstrass(const Field& field, Elem a2, Elem a4, Elem a6) {
    if (!field.is_prime_field()) {
      throw Error(ErrorKind::kInvalidCurve,
                  "odd Weierstrass curves need a prime field");
    }
    if (!field.contains(a2) || !field.contains(a4) || !field.contains(a6)) {
      throw Error(ErrorKind::kInvalidCurve, "coefficient not canonical");
    }
    if (a2 == 0 && field.characteristic() < 5) {
      throw Error(ErrorKind::kInvalidCurve,
                  "short form Y^2 = X^3 + AX + B needs characteristic >= 5");
    }
    CurveSpec spec;
    spec.variant = CurveVariant::kOddWeierstrass;
    spec.field = field;
    spec.a2 = a2;
    spec.a4 = a4;
    spec.a6 = a6;
    Curve curve(spec);
    if (curve.discriminant() == 0) {
      throw Error(ErrorKind::kInvalidCurve,
                  "singular curve (zero discriminant) over " +
                      field.describe());
    }
    return curve;
  }

  static Curve short_weierstrass(const Field& field, Elem a, Elem b) {
    return weierstrass(field, 0, a, b);
  }

  // Y^2 + XY = X^3 + a X^2 + 1 over F_{2^n}.
  static Curve koblitz(const Field& field, unsigned a) {
    if (!field.is_binary_field()) {
      throw Error(ErrorKind::kInvalidCurve, "Koblitz curves need F_{2^n}");
    }
    if (a > 1) {
      throw Error(ErrorKind::kInvalidCurve, "Koblitz coefficient must be 0 or 1");
    }
    CurveSpec spec;
    spec.variant = CurveVariant::kKoblitz;
    spec.field = field;
    spec.a2 = a;
    spec.a6 = 1;
    spec.koblitz_a = a;
    return Curve(spec);
  }

  // Y^2 = X^3 - (3/4) X^2 - 2X - 1 over F_p with p = 1, 2, 4 (mod 7), which
  // carries an endomorphism of norm 2. xi is the smaller square root of -7.
  static Curve glv(std::uint64_t p) {
    const Field field = Field::prime(p);
    const std::uint64_t r = p % 7;
    if (r != 1 && r != 2 && r != 4) {
      throw Error(ErrorKind::kInvalidCurve,
                  "GLV curve needs p = 1, 2 or 4 (mod 7), got p = " +
                      std::to_string(p));
    }
    CurveSpec spec;
    spec.variant = CurveVariant::kGlv;
    spec.field = field;
    const Elem four_inv = field.inv(4);
    spec.a2 = field.neg(field.mul(3, four_inv));
    spec.a4 = field.from_int(-2);
    spec.a6 = field.from_int(-1);
    spec.xi = field.sqrt(field.from_int(-7));
    spec.glv_b = field.mul(field.add(1, spec.xi), field.inv(2));
    spec.glv_c = field.mul(field.sub(spec.glv_b, 3), four_inv);
    Curve curve(spec);
    if (curve.discriminant() == 0) {
      throw Error(ErrorKind::kInvalidCurve, "GLV curve is singular mod p");
    }
    return curve;
  }

  const CurveSpec& spec() const { return spec_; }
  const Field& field() const { return spec_.field; }
  CurveVariant variant() const { return spec_.variant; }
  bool is_binary() const { return spec_.variant == CurveVariant::kKoblitz; }

  // Discriminant of the cubic on the right-hand side (odd characteristic).
  Elem discriminant() const {
    const Field& f = field();
    if (is_binary()) return 1;
    const Elem a2 = spec_.a2, a4 = spec_.a4, a6 = spec_.a6;
    const Elem a2sq = f.sqr(a2);
    Elem d = f.mul(a2sq, f.sqr(a4));
    d = f.sub(d, f.mul(4, f.mul(a4, f.sqr(a4))));
    d = f.sub(d, f.mul(4, f.mul(f.mul(a2sq, a2), a6)));
    d = f.sub(d, f.mul(f.from_int(27), f.sqr(a6)));
    d = f.add(d, f.mul(f.from_int(18), f.mul(f.mul(a2, a4), a6)));
    return d;
  }

  // Right-hand side X^3 + a2 X^2 + a4 X + a6.
  Elem rhs(Elem x) const {
    const Field& f = field();
    Elem v = f.add(x, spec_.a2);
    v = f.add(f.mul(v, x), spec_.a4);
    return f.add(f.mul(v, x), spec_.a6);
  }

  bool on_curve(const Point& p) const {
    if (p.is_infinity()) return true;
    const Field& f = field();
    if (!f.contains(p.x()) || !f.contains(p.y())) return false;
    if (is_binary()) {
      const Elem lhs = f.add(f.sqr(p.y()), f.mul(p.x(), p.y()));
      return lhs == rhs(p.x());
    }
    return f.sqr(p.y()) == rhs(p.x());
  }

  Point neg(const Point& p) const {
    if (p.is_infinity()) return p;
    const Field& f = field();
    if (is_binary()) return Point::affine(p.x(), f.add(p.x(), p.y()));
    return Point::affine(p.x(), f.neg(p.y()));
  }

  Point add(const Point& p, const Point& q) const {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    return is_binary() ? add_binary(p, q) : add_odd(p, q);
  }

  Point sub(const Point& p, const Point& q) const { return add(p, neg(q)); }
  Point dbl(const Point& p) const { return add(p, p); }

  // n*P by double-and-add; negative n uses -P.
  Point mul(std::int64_t n, const Point& p) const {
    std::uint64_t k = n < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(n)
                            : static_cast<std::uint64_t>(n);
    const Point base = n < 0 ? neg(p) : p;
    return mul_unsigned(k, base);
  }

  Point mul_unsigned(std::uint64_t k, Point base) const {
    Point acc = Point::infinity();
    while (k > 0) {
      if (k & 1) acc = add(acc, base);
      base = dbl(base);
      k >>= 1;
    }
    return acc;
  }

  // Group law on points that are first checked to lie on this curve.
  Point checked_add(const Point& p, const Point& q) const {
    require_on_curve(p);
    require_on_curve(q);
    return add(p, q);
  }

  void require_on_curve(const Point& p) const {
    if (!on_curve(p)) {
      throw Error(ErrorKind::kCurveMismatch,
                  "point " + to_string(p) + " is not on " + describe());
    }
  }

  std::string describe() const {
    std::string s(to_string(spec_.variant));
    s += " over " + field().describe();
    if (is_binary()) return s + " (a=" + std::to_string(spec_.koblitz_a) + ")";
    return s + " [" + std::to_string(spec_.a2) + "," + std::to_string(spec_.a4) +
           "," + std::to_string(spec_.a6) + "]";
  }

  friend bool operator==(const Curve& a, const Curve& b) {
    return a.spec_ == b.spec_;
  }

 private:
  explicit Curve(CurveSpec spec) : spec_(std::move(spec)) {}

  Point add_odd(const Point& p, const Point& q) const {
    const Field& f = field();
    Elem lambda;
    if (p.x() == q.x()) {
      if (f.add(p.y(), q.y()) == 0) return Point::infinity();
      // Tangent: (3x^2 + 2 a2 x + a4) / 2y.
      const Elem x = p.x();
      Elem num = f.mul(3, f.sqr(x));
      num = f.add(num, f.mul(f.add(spec_.a2, spec_.a2), x));
      num = f.add(num, spec_.a4);
      lambda = f.div(num, f.add(p.y(), p.y()));
    } else {
      lambda = f.div(f.sub(q.y(), p.y()), f.sub(q.x(), p.x()));
    }
    const Elem x3 =
        f.sub(f.sub(f.sub(f.sqr(lambda), spec_.a2), p.x()), q.x());
    const Elem y3 = f.sub(f.mul(lambda, f.sub(p.x(), x3)), p.y());
    return Point::affine(x3, y3);
  }

  Point add_binary(const Point& p, const Point& q) const {
    const Field& f = field();
    const Elem a = spec_.koblitz_a;
    if (p.x() == q.x()) {
      if (q.y() == f.add(p.x(), p.y())) return Point::infinity();
      // Doubling; here x != 0 because x = 0 gives P = -P.
      const Elem x = p.x();
      const Elem lambda = f.add(x, f.div(p.y(), x));
      const Elem x3 = f.add(f.add(f.sqr(lambda), lambda), a);
      const Elem y3 = f.add(f.add(f.sqr(x), f.mul(lambda, x3)), x3);
      return Point::affine(x3, y3);
    }
    const Elem lambda = f.div(f.add(p.y(), q.y()), f.add(p.x(), q.x()));
    const Elem x3 =
        f.add(f.add(f.add(f.add(f.sqr(lambda), lambda), p.x()), q.x()), a);
    const Elem y3 = f.add(f.add(f.mul(lambda, f.add(p.x(), x3)), x3), p.y());
    return Point::affine(x3, y3);
  }

  CurveSpec spec_;
};

// Parses "inf" or "x:y" and checks the point lies on `curve`.
inline Point parse_point(std::string_view text, const Curve& curve) {
  if (text == "inf" || text == "O") return Point::infinity();
  const auto colon = text.find(':');
  auto parse = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() ||
        v > std::numeric_limits<Elem>::max()) {
      throw Error(ErrorKind::kParameterError,
                  "malformed point '" + std::string(text) + "'");
    }
    return static_cast<Elem>(v);
  };
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::kParameterError,
                "malformed point '" + std::string(text) + "'");
  }
  const Point p =
      Point::affine(parse(text.substr(0, colon)), parse(text.substr(colon + 1)));
  curve.require_on_curve(p);
  return p;
}

// All points of E(F_q): O first, then affine points by (x, y).
inline std::vector<Point> enumerate_points(const Curve& curve,
                                           const Limits& limits = kDefaultLimits) {
  const Field& f = curve.field();
  const std::uint64_t q = f.size();
  if (q > limits.max_enumeration_q) {
    throw Error(ErrorKind::kScaleLimitExceeded,
                "point enumeration limited to q <= " +
                    std::to_string(limits.max_enumeration_q) + ", got " +
                    std::to_string(q));
  }
  constexpr Elem kNone = std::numeric_limits<Elem>::max();
  std::vector<Point> points{Point::infinity()};
  if (!curve.is_binary()) {
    // root[v] = smallest y with y^2 = v.
    std::vector<Elem> root(q, kNone);
    for (std::uint64_t y = q; y-- > 0;) {
      root[f.sqr(static_cast<Elem>(y))] = static_cast<Elem>(y);
    }
    for (std::uint64_t xi = 0; xi < q; ++xi) {
      const Elem x = static_cast<Elem>(xi);
      const Elem v = curve.rhs(x);
      const Elem r = root[v];
      if (r == kNone) continue;
      points.push_back(Point::affine(x, r));
      if (r != 0) points.push_back(Point::affine(x, f.neg(r)));
    }
    return points;
  }
  // Binary: Y = xZ turns the equation into Z^2 + Z = x + a + 1/x^2.
  std::vector<Elem> artin(q, kNone);
  for (std::uint64_t z = q; z-- > 0;) {
    const Elem ze = static_cast<Elem>(z);
    artin[f.add(f.sqr(ze), ze)] = ze;
  }
  const Elem a = curve.spec().koblitz_a;
  points.push_back(Point::affine(0, 1));  // x = 0 forces Y^2 = 1.
  for (std::uint64_t xi = 1; xi < q; ++xi) {
    const Elem x = static_cast<Elem>(xi);
    const Elem c = f.add(f.add(x, a), f.inv(f.sqr(x)));
    const Elem z = artin[c];
    if (z == kNone) continue;
    Elem y0 = f.mul(x, z);
    Elem y1 = f.mul(x, z ^ 1);
    if (y1 < y0) std::swap(y0, y1);
    points.push_back(Point::affine(x, y0));
    points.push_back(Point::affine(x, y1));
  }
  return points;
}

inline std::uint64_t count_points(const Curve& curve,
                                  const Limits& limits = kDefaultLimits) {
  return enumerate_points(curve, limits).size();
}

// Least t > 0 with tP = O, given any multiple `group_order` of it (usually
// #E(F_q)).
inline std::uint64_t point_order(const Curve& curve, const Point& p,
                                 std::uint64_t group_order) {
  std::uint64_t ord = group_order;
  for (auto [prime, exp] : factorize(group_order)) {
    for (unsigned i = 0; i < exp; ++i) {
      if (!curve.mul_unsigned(ord / prime, p).is_infinity()) break;
      ord /= prime;
    }
  }
  return ord;
}

inline std::uint64_t point_order(const Curve& curve, const Point& p,
                                 const Limits& limits = kDefaultLimits) {
  return point_order(curve, p, count_points(curve, limits));
}

// Ordinary iff the Frobenius trace q + 1 - #E is nonzero mod p. Koblitz
// curves are always ordinary.
inline bool is_ordinary(const Curve& curve, std::uint64_t group_order) {
  if (curve.is_binary()) return true;
  const auto q = static_cast<std::int64_t>(curve.field().size());
  const std::int64_t trace = q + 1 - static_cast<std::int64_t>(group_order);
  return trace % static_cast<std::int64_t>(curve.field().characteristic()) != 0;
}

inline bool is_ordinary(const Curve& curve,
                        const Limits& limits = kDefaultLimits) {
  return is_ordinary(curve, count_points(curve, limits));
}

struct Coord {
  std::uint32_t a = 0;  // mod M
  std::uint32_t b = 0;  // mod L
  friend bool operator==(const Coord&, const Coord&) = default;
};

// Which end of the canonical point order the basis search starts from. The
// default (smallest) fixes the character indexing; kLargest gives a second,
// independent basis for cross-checks.
enum class BasisOrder { kSmallest, kLargest };

// E(F_q) = Z_M x Z_L realised by a basis (P1, P2) and a full coordinate table.
class GroupStructure {
 public:
  const Curve& curve() const { return curve_; }
  std::uint64_t order() const { return points_.size(); }
  std::uint32_t m() const { return m_; }
  std::uint32_t l() const { return l_; }
  const Point& p1() const { return p1_; }
  const Point& p2() const { return p2_; }

  // All points in canonical order; indices below refer to this list.
  const std::vector<Point>& points() const { return points_; }

  std::optional<std::size_t> find_index(const Point& p) const {
    auto it = index_.find(p.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const Point& p) const {
    if (auto i = find_index(p)) return *i;
    if (!curve_.on_curve(p)) curve_.require_on_curve(p);
    throw Error(ErrorKind::kInternalInconsistency,
                "point " + to_string(p) + " missing from coordinate table");
  }

  Coord coord_at(std::size_t index) const { return coords_[index]; }

  // (a mod M, b mod L) with a P1 + b P2 = P.
  Coord decompose(const Point& p) const { return coords_[index_of(p)]; }

  std::size_t index_at(Coord c) const {
    return by_coord_[std::size_t{c.a % m_} * l_ + c.b % l_];
  }

  const Point& compose(std::uint64_t a, std::uint64_t b) const {
    return points_[by_coord_[(a % m_) * l_ + b % l_]];
  }

  // Index of P_i + P_j computed through coordinates.
  std::size_t add_index(std::size_t i, std::size_t j) const {
    const Coord ci = coords_[i], cj = coords_[j];
    return by_coord_[((std::size_t{ci.a} + cj.a) % m_) * l_ +
                     (std::size_t{ci.b} + cj.b) % l_];
  }

  std::uint64_t order_of(const Point& p) const {
    const Coord c = decompose(p);
    const std::uint64_t oa = m_ / std::gcd<std::uint64_t>(c.a, m_);
    const std::uint64_t ob = l_ / std::gcd<std::uint64_t>(c.b, l_);
    return std::lcm(oa, ob);
  }

  // H_d = {Q : dQ = O}, in canonical order.
  std::vector<Point> torsion(std::uint64_t d) const {
    if (d == 0) {
      throw Error(ErrorKind::kParameterError, "torsion index must be >= 1");
    }
    std::vector<Point> out;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const Coord c = coords_[i];
      if ((d % m_) * c.a % m_ == 0 && (d % l_) * c.b % l_ == 0) {
        out.push_back(points_[i]);
      }
    }
    return out;
  }

  static std::shared_ptr<const GroupStructure> build(
      const Curve& curve, const Limits& limits = kDefaultLimits,
      BasisOrder basis_order = BasisOrder::kSmallest) {
    if (curve.field().size() > limits.max_structure_q) {
      throw Error(ErrorKind::kScaleLimitExceeded,
                  "group structure limited to q <= " +
                      std::to_string(limits.max_structure_q) + ", got " +
                      std::to_string(curve.field().size()));
    }
    auto s = std::shared_ptr<GroupStructure>(new GroupStructure(curve));
    s->points_ = enumerate_points(curve, limits);
    const std::uint64_t n = s->points_.size();
    s->index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s->index_.emplace(s->points_[i].key(), i);

    std::vector<std::uint64_t> orders(n);
    std::uint64_t m = 1;
    for (std::size_t i = 0; i < n; ++i) {
      orders[i] = point_order(curve, s->points_[i], n);
      m = std::max(m, orders[i]);
    }
    if (n % m != 0) {
      throw Error(ErrorKind::kInternalInconsistency, "exponent does not divide #E");
    }
    const std::uint64_t l = n / m;
    s->m_ = static_cast<std::uint32_t>(m);
    s->l_ = static_cast<std::uint32_t>(l);

    std::vector<std::size_t> scan(n);
    std::iota(scan.begin(), scan.end(), 0);
    if (basis_order == BasisOrder::kLargest) std::reverse(scan.begin(), scan.end());

    std::size_t i1 = n;
    for (std::size_t i : scan) {
      if (orders[i] == m) {
        i1 = i;
        break;
      }
    }
    s->p1_ = s->points_[i1];

    std::vector<std::int64_t> log_p1(n, -1);
    {
      Point acc = Point::infinity();
      for (std::uint64_t a = 0; a < m; ++a) {
        log_p1[s->index_.at(acc.key())] = static_cast<std::int64_t>(a);
        acc = curve.add(acc, s->p1_);
      }
    }

    s->p2_ = Point::infinity();
    if (l > 1) {
      bool found = false;
      for (std::size_t i : scan) {
        if (orders[i] != l) continue;
        const Point& cand = s->points_[i];
        bool disjoint = true;
        Point acc = cand;
        for (std::uint64_t j = 1; j < l && disjoint; ++j) {
          if (log_p1[s->index_.at(acc.key())] >= 0) disjoint = false;
          acc = curve.add(acc, cand);
        }
        if (disjoint) {
          s->p2_ = cand;
          found = true;
          break;
        }
      }
      if (!found) {
        throw Error(ErrorKind::kInternalInconsistency,
                    "no complement of <P1> found");
      }
    }

    s->coords_.assign(n, Coord{});
    s->by_coord_.assign(n, n);
    std::vector<bool> filled(n, false);
    Point row = Point::infinity();
    for (std::uint64_t b = 0; b < l; ++b) {
      Point acc = row;
      for (std::uint64_t a = 0; a < m; ++a) {
        const std::size_t idx = s->index_of(acc);
        const std::size_t slot = a * l + b;
        if (s->by_coord_[slot] != n || filled[idx]) {
          throw Error(ErrorKind::kInternalInconsistency,
                      "basis does not give a bijection");
        }
        s->by_coord_[slot] = idx;
        s->coords_[idx] = Coord{static_cast<std::uint32_t>(a),
                                static_cast<std::uint32_t>(b)};
        filled[idx] = true;
        acc = curve.add(acc, s->p1_);
      }
      row = curve.add(row, s->p2_);
    }
    return s;
  }

 private:
  explicit GroupStructure(Curve curve) : curve_(std::move(curve)) {}

  Curve curve_;
  std::vector<Point> points_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<Coord> coords_;
  std::vector<std::size_t> by_coord_;
  std::uint32_t m_ = 1;
  std::uint32_t l_ = 1;
  Point p1_;
  Point p2_;
};

inline std::shared_ptr<const GroupStructure> group_structure(
    const Curve& curve, const Limits& limits = kDefaultLimits,
    BasisOrder basis_order = BasisOrder::kSmallest) {
  return GroupStructure::build(curve, limits, basis_order);
}

}  // namespace ecsum
