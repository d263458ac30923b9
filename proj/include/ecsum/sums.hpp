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

// Exponential sums over points of an elliptic curve.
//
// Zero convention: x(O) is undefined, and a character whose argument needs an
// undefined x-coordinate contributes 0. Summation always runs in the
// canonical order of the inputs, so every value is bit-reproducible.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecsum/bounds.hpp"
#include "ecsum/characters.hpp"
#include "ecsum/curves.hpp"
#include "ecsum/error.hpp"
#include "ecsum/fields.hpp"
#include "ecsum/report.hpp"

namespace ecsum {

inline std::optional<Elem> x_coord(const Point& p) {
  if (p.is_infinity()) return std::nullopt;
  return p.x();
}

// psi(x(P)), or 0 at P = O.
inline Complex psi_of_x(const AdditiveCharacter& psi, const Point& p) {
  return p.is_infinity() ? Complex{} : psi(p.x());
}

inline void require_same_field(const Curve& curve, const AdditiveCharacter& psi) {
  if (!(curve.field() == psi.field())) {
    throw Error(ErrorKind::kFieldMismatch,
                "character over " + psi.field().describe() + " used on " +
                    curve.describe());
  }
}

// Points with nonzero complex weights, all on one curve, in canonical order.
class WeightedPointSet {
 public:
  WeightedPointSet(Curve curve, std::vector<std::pair<Point, Complex>> entries)
      : curve_(std::move(curve)), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& [p, w] = entries_[i];
      curve_.require_on_curve(p);
      if (w == Complex{}) {
        throw Error(ErrorKind::kParameterError,
                    "zero weight at " + to_string(p));
      }
      if (i > 0 && entries_[i - 1].first == p) {
        throw Error(ErrorKind::kParameterError,
                    "duplicate point " + to_string(p));
      }
      norm_sq_ += std::norm(w);
      l1_ += std::abs(w);
    }
  }

  static WeightedPointSet uniform(Curve curve, const std::vector<Point>& points,
                                  Complex weight = 1.0) {
    std::vector<std::pair<Point, Complex>> entries;
    entries.reserve(points.size());
    for (const Point& p : points) entries.emplace_back(p, weight);
    return WeightedPointSet(std::move(curve), std::move(entries));
  }

  const Curve& curve() const { return curve_; }
  const std::vector<std::pair<Point, Complex>>& entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // sum |w|^2
  double norm_sq() const { return norm_sq_; }
  // sum |w|
  double l1_norm() const { return l1_; }

 private:
  Curve curve_;
  std::vector<std::pair<Point, Complex>> entries_;
  double norm_sq_ = 0.0;
  double l1_ = 0.0;
};

// Residues of Z_T^* with weights of modulus at most 1.
class WeightedResidueSet {
 public:
  WeightedResidueSet(std::uint64_t modulus,
                     std::vector<std::pair<std::uint64_t, Complex>> entries)
      : modulus_(modulus), entries_(std::move(entries)) {
    if (modulus == 0) {
      throw Error(ErrorKind::kParameterError, "modulus must be positive");
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& [r, w] = entries_[i];
      if (r >= modulus || std::gcd(r, modulus) != 1) {
        throw Error(ErrorKind::kInvalidResidue,
                    std::to_string(r) + " is not a unit mod " +
                        std::to_string(modulus));
      }
      if (std::abs(w) > 1.0 + 1e-12) {
        throw Error(ErrorKind::kParameterError, "weight exceeds 1 in modulus");
      }
      if (i > 0 && entries_[i - 1].first == r) {
        throw Error(ErrorKind::kParameterError,
                    "duplicate residue " + std::to_string(r));
      }
      l1_ += std::abs(w);
    }
  }

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<std::pair<std::uint64_t, Complex>>& entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }
  double l1_norm() const { return l1_; }

 private:
  std::uint64_t modulus_;
  std::vector<std::pair<std::uint64_t, Complex>> entries_;
  double l1_ = 0.0;
};

// ---------------------------------------------------------------------------
// Single sums over a cyclic subgroup.

// Which group-character argument the single sum uses: chi(nG) per term, or
// the fixed chi(G) factor.
enum class SingleSumTwist { kPointMultiple, kFixedPoint };

// sum_{n in Z_T} psi(x(nG)) chi(nG), T the order of G.
inline SumReport single_sum(const Point& g, const AdditiveCharacter& psi,
                            const GroupCharacter& chi,
                            SingleSumTwist twist = SingleSumTwist::kPointMultiple) {
  const GroupStructure& s = chi.structure();
  const Curve& curve = s.curve();
  require_same_field(curve, psi);
  curve.require_on_curve(g);
  const std::uint64_t order = s.order_of(g);

  const Complex fixed = chi(g);
  Complex acc{};
  Point p = Point::infinity();
  for (std::uint64_t n = 0; n < order; ++n) {
    if (!p.is_infinity()) {
      const Complex twist_value =
          twist == SingleSumTwist::kPointMultiple ? chi(p) : fixed;
      acc += psi(p.x()) * twist_value;
    }
    p = curve.add(p, g);
  }

  SumReport report;
  report.kind = "single_sum";
  report.set_value(acc);
  report.params["q"] = curve.field().size();
  report.params["G"] = to_string(g);
  report.params["T"] = order;
  report.params["psi"] = psi.index();
  report.params["u"] = chi.u();
  report.params["v"] = chi.v();
  report.params["twist"] =
      twist == SingleSumTwist::kPointMultiple ? "point_multiple" : "fixed_point";
  BoundParams bp;
  bp.q = static_cast<double>(curve.field().size());
  report.add_bound(std::string(to_string(BoundKind::kSingleSum)),
                   bound_eval(BoundKind::kSingleSum, bp));
  if (!is_ordinary(curve, s.order())) {
    report.warnings.push_back("curve is not ordinary");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Bilinear sums.

// sum_{a in A} sum_{b in B} alpha_a beta_b psi(x(ab G)); A and B live in
// Z_T^* with T the order of G.
inline SumReport bilinear_mult_sum(const Curve& curve, const Point& g,
                                   const WeightedResidueSet& a_set,
                                   const WeightedResidueSet& b_set,
                                   const AdditiveCharacter& psi,
                                   const Limits& limits = kDefaultLimits) {
  require_same_field(curve, psi);
  curve.require_on_curve(g);
  const std::uint64_t group_order = count_points(curve, limits);
  const std::uint64_t order = point_order(curve, g, group_order);
  if (a_set.modulus() != order || b_set.modulus() != order) {
    throw Error(ErrorKind::kParameterError,
                "residue sets must be taken modulo the order of G (" +
                    std::to_string(order) + ")");
  }
  // values[n] = psi(x(nG)).
  std::vector<Complex> values(order);
  Point p = Point::infinity();
  for (std::uint64_t n = 0; n < order; ++n) {
    values[n] = psi_of_x(psi, p);
    p = curve.add(p, g);
  }
  Complex acc{};
  for (const auto& [a, alpha] : a_set.entries()) {
    Complex inner{};
    for (const auto& [b, beta] : b_set.entries()) {
      inner += beta * values[mulmod(a, b, order)];
    }
    acc += alpha * inner;
  }

  SumReport report;
  report.kind = "bilinear_mult";
  report.set_value(acc);
  const double q = static_cast<double>(curve.field().size());
  report.params["q"] = curve.field().size();
  report.params["G"] = to_string(g);
  report.params["T"] = order;
  report.params["size_a"] = a_set.size();
  report.params["size_b"] = b_set.size();
  report.params["psi"] = psi.index();
  if (!a_set.entries().empty() && !b_set.entries().empty()) {
    BoundParams bp;
    bp.q = q;
    bp.size_a = static_cast<double>(a_set.size());
    bp.size_b = static_cast<double>(b_set.size());
    bp.order_T = static_cast<double>(order);
    report.add_bound(std::string(to_string(BoundKind::kBilinearMultiplicative)),
                     bound_eval_min_nu(BoundKind::kBilinearMultiplicative, bp));
  }
  report.add_bound("trivial", a_set.l1_norm() * b_set.l1_norm());
  if (!is_ordinary(curve, group_order)) {
    report.warnings.push_back("curve is not ordinary");
  }
  return report;
}

// sum_{P} sum_{Q} rho(P) theta(Q) psi(x(P + Q)), by direct double loop over
// the group law.
inline Complex bilinear_add_value(const WeightedPointSet& ps,
                                  const WeightedPointSet& qs,
                                  const AdditiveCharacter& psi) {
  if (!(ps.curve() == qs.curve())) {
    throw Error(ErrorKind::kCurveMismatch,
                "weighted sets live on different curves");
  }
  const Curve& curve = ps.curve();
  require_same_field(curve, psi);
  Complex acc{};
  for (const auto& [p, rho] : ps.entries()) {
    Complex inner{};
    for (const auto& [q, theta] : qs.entries()) {
      inner += theta * psi_of_x(psi, curve.add(p, q));
    }
    acc += rho * inner;
  }
  return acc;
}

inline SumReport bilinear_add_sum(const WeightedPointSet& ps,
                                  const WeightedPointSet& qs,
                                  const AdditiveCharacter& psi) {
  SumReport report;
  report.kind = "bilinear_add";
  report.set_value(bilinear_add_value(ps, qs, psi));
  const double q = static_cast<double>(ps.curve().field().size());
  report.params["q"] = ps.curve().field().size();
  report.params["size_p"] = ps.size();
  report.params["size_q"] = qs.size();
  report.params["R"] = ps.norm_sq();
  report.params["T"] = qs.norm_sq();
  report.params["psi"] = psi.index();
  BoundParams bp;
  bp.q = q;
  bp.weight_r = ps.norm_sq();
  bp.weight_t = qs.norm_sq();
  report.add_bound(std::string(to_string(BoundKind::kBilinearAdditive)),
                   bound_eval(BoundKind::kBilinearAdditive, bp));
  if (!ps.empty() && !qs.empty()) {
    bp.size_a = static_cast<double>(ps.size());
    bp.size_b = static_cast<double>(qs.size());
    report.add_bound(std::string(to_string(BoundKind::kBilinearAdditivePrior)),
                     bound_eval_min_nu(BoundKind::kBilinearAdditivePrior, bp));
  }
  report.add_bound("trivial", ps.l1_norm() * qs.l1_norm());
  return report;
}

// The same sum rebuilt from the dual group:
//   (1/#E) sum_chi (sum_S psi(x(S)) conj(chi(S))) (sum_P rho chi(P))
//                  (sum_Q theta chi(Q)).
inline Complex bilinear_add_sum_via_characters(const WeightedPointSet& ps,
                                               const WeightedPointSet& qs,
                                               const AdditiveCharacter& psi,
                                               const GroupStructure& s) {
  if (!(ps.curve() == qs.curve()) || !(ps.curve() == s.curve())) {
    throw Error(ErrorKind::kCurveMismatch,
                "weighted sets and structure live on different curves");
  }
  require_same_field(s.curve(), psi);
  const std::uint64_t n = s.order();
  const std::uint64_t m = s.m(), l = s.l();
  const RootTable roots(n);

  std::vector<Coord> coords(n);
  std::vector<Complex> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    coords[i] = s.coord_at(i);
    f[i] = psi_of_x(psi, s.points()[i]);
  }
  auto weighted_coords = [&](const WeightedPointSet& set) {
    std::vector<std::pair<Coord, Complex>> out;
    out.reserve(set.size());
    for (const auto& [p, w] : set.entries()) out.emplace_back(s.decompose(p), w);
    return out;
  };
  const auto pc = weighted_coords(ps);
  const auto qc = weighted_coords(qs);

  auto phase = [&](std::uint64_t u, std::uint64_t v, Coord c) {
    return (u * c.a % m * l + v * c.b % l * m) % n;
  };

  Complex total{};
  for (std::uint64_t u = 0; u < m; ++u) {
    for (std::uint64_t v = 0; v < l; ++v) {
      Complex fs{};
      for (std::size_t i = 0; i < n; ++i) {
        if (f[i] == Complex{}) continue;
        fs += f[i] * std::conj(roots[phase(u, v, coords[i])]);
      }
      Complex sp{};
      for (const auto& [c, w] : pc) sp += w * roots[phase(u, v, c)];
      Complex sq{};
      for (const auto& [c, w] : qc) sq += w * roots[phase(u, v, c)];
      total += fs * sp * sq;
    }
  }
  return total / static_cast<double>(n);
}

// ---------------------------------------------------------------------------
// Stationary sums S_n(psi; a, b) = sum_P psi(a x(P) + b x(nP)).
//
// The P = O term contributes 0. When nP = O for P != O, the b x(nP)
// component is dropped, so the b = 0 and n = 0 (mod #E) cases reduce to
// sum_{P != O} psi(a x(P)).

inline Complex stationary_term(const Curve& curve, std::int64_t n, Elem a,
                               Elem b, const AdditiveCharacter& psi,
                               const Point& p) {
  if (p.is_infinity()) return {};
  const Field& f = curve.field();
  Elem arg = f.mul(a, p.x());
  const Point np = curve.mul(n, p);
  if (!np.is_infinity()) arg = f.add(arg, f.mul(b, np.x()));
  return psi(arg);
}

inline void check_stationary_args(const Curve& curve, std::int64_t n, Elem a,
                                  Elem b) {
  if (n <= 0) throw Error(ErrorKind::kParameterError, "n must be positive");
  if (a == 0) {
    throw Error(ErrorKind::kParameterError, "a must be a nonzero field element");
  }
  if (!curve.field().contains(a) || !curve.field().contains(b)) {
    throw Error(ErrorKind::kParameterError, "a, b must be canonical elements");
  }
}

inline Complex stationary_value(const Curve& curve,
                                const std::vector<Point>& points,
                                std::int64_t n, Elem a, Elem b,
                                const AdditiveCharacter& psi) {
  Complex acc{};
  for (const Point& p : points) acc += stationary_term(curve, n, a, b, psi, p);
  return acc;
}

inline SumReport stationary_sum(const Curve& curve, std::int64_t n, Elem a,
                                Elem b, const AdditiveCharacter& psi,
                                const Limits& limits = kDefaultLimits) {
  check_stationary_args(curve, n, a, b);
  require_same_field(curve, psi);
  const auto points = enumerate_points(curve, limits);
  const std::uint64_t group_order = points.size();
  const std::uint64_t d = std::gcd(static_cast<std::uint64_t>(n), group_order);

  SumReport report;
  report.kind = "stationary";
  report.set_value(stationary_value(curve, points, n, a, b, psi));
  const double q = static_cast<double>(curve.field().size());
  report.params["q"] = curve.field().size();
  report.params["order"] = group_order;
  report.params["n"] = n;
  report.params["a"] = a;
  report.params["b"] = b;
  report.params["d"] = d;
  report.params["psi"] = psi.index();
  BoundParams bp;
  bp.q = q;
  bp.n = static_cast<double>(n);
  bp.d = static_cast<double>(d);
  for (BoundKind kind :
       {BoundKind::kStationaryGeneral, BoundKind::kStationaryLargeD,
        BoundKind::kStationarySmallD, BoundKind::kStationaryTorsion}) {
    report.add_bound(std::string(to_string(kind)), bound_eval(kind, bp));
  }
  if (!is_ordinary(curve, group_order)) {
    report.warnings.push_back("curve is not ordinary");
  }
  return report;
}

// sum_P term(P + Q): the sum reindexed by a fixed translation.
inline Complex stationary_sum_translated(const GroupStructure& s, std::int64_t n,
                                         Elem a, Elem b,
                                         const AdditiveCharacter& psi,
                                         const Point& shift) {
  const Curve& curve = s.curve();
  check_stationary_args(curve, n, a, b);
  Complex acc{};
  for (const Point& p : s.points()) {
    acc += stationary_term(curve, n, a, b, psi, curve.add(p, shift));
  }
  return acc;
}

// (1/#H_d) sum_P sum_{Q in H_d} psi(b x(nP)) psi(a x(P + Q)), d = gcd(n, #E):
// the average over d-torsion translates, using nQ = O to move the second
// coordinate back to nP.
inline Complex stationary_sum_torsion_average(const GroupStructure& s,
                                              std::int64_t n, Elem a, Elem b,
                                              const AdditiveCharacter& psi) {
  const Curve& curve = s.curve();
  check_stationary_args(curve, n, a, b);
  require_same_field(curve, psi);
  const Field& f = curve.field();
  const std::uint64_t d = std::gcd(static_cast<std::uint64_t>(n), s.order());
  const auto torsion = s.torsion(d);
  Complex acc{};
  for (const Point& p : s.points()) {
    const Point np = curve.mul(n, p);
    const Complex second = np.is_infinity() ? Complex(1.0, 0.0)
                                            : psi(f.mul(b, np.x()));
    Complex inner{};
    for (const Point& q : torsion) {
      const Point sum = curve.add(p, q);
      if (sum.is_infinity()) continue;
      inner += psi(f.mul(a, sum.x()));
    }
    acc += second * inner;
  }
  return acc / static_cast<double>(torsion.size());
}

// ---------------------------------------------------------------------------
// Power generator W_n = e^n G.

struct PowerGenOptions {
  int nu_min = 1;
  int nu_max = 4;
  double epsilon = 0.0;
};

inline std::uint64_t reduce_exponent(std::int64_t e, std::uint64_t t) {
  const auto st = static_cast<std::int64_t>(t);
  std::int64_t r = e % st;
  if (r < 0) r += st;
  return static_cast<std::uint64_t>(r);
}

// Least n > 0 with W_n = W_0, found by walking the sequence.
inline std::uint64_t power_generator_period(const Curve& curve, const Point& g,
                                            std::int64_t e,
                                            std::uint64_t max_steps) {
  Point w = curve.mul(e, g);
  for (std::uint64_t n = 1; n <= max_steps; ++n) {
    if (w == g) return n;
    w = curve.mul(e, w);
  }
  throw Error(ErrorKind::kInternalInconsistency, "power generator did not cycle");
}

// sum_{n < N} psi(x(e^n G)) without envelopes.
inline Complex power_gen_value(const Curve& curve, const Point& g,
                               std::int64_t e, std::uint64_t length,
                               const AdditiveCharacter& psi) {
  Complex acc{};
  Point w = g;
  for (std::uint64_t n = 0; n < length; ++n) {
    acc += psi_of_x(psi, w);
    w = curve.mul(e, w);
  }
  return acc;
}

inline SumReport power_gen_sum(const Curve& curve, const Point& g,
                               std::int64_t e, std::uint64_t length,
                               const AdditiveCharacter& psi,
                               const PowerGenOptions& options = {},
                               const Limits& limits = kDefaultLimits) {
  require_same_field(curve, psi);
  curve.require_on_curve(g);
  const std::uint64_t group_order = count_points(curve, limits);
  const std::uint64_t t = point_order(curve, g, group_order);
  const std::uint64_t er = reduce_exponent(e, t);
  if (std::gcd(er, t) != 1) {
    throw Error(ErrorKind::kParameterError,
                "e = " + std::to_string(e) + " is not coprime to t = " +
                    std::to_string(t));
  }
  const std::uint64_t period = multiplicative_order(er, t);
  if (length < 1 || length > period) {
    throw Error(ErrorKind::kParameterError,
                "N must lie in [1, " + std::to_string(period) + "]");
  }

  SumReport report;
  report.kind = "powgen";
  report.set_value(power_gen_value(curve, g, e, length, psi));
  const double q = static_cast<double>(curve.field().size());
  report.params["q"] = curve.field().size();
  report.params["G"] = to_string(g);
  report.params["t"] = t;
  report.params["e"] = e;
  report.params["period"] = period;
  report.params["N"] = length;
  report.params["psi"] = psi.index();
  report.params["epsilon"] = options.epsilon;
  report.params["order_hypothesis_met"] =
      static_cast<double>(t) >= std::pow(q, 0.5 + options.epsilon);
  BoundParams bp;
  bp.q = q;
  bp.t = static_cast<double>(t);
  bp.length = static_cast<double>(length);
  bp.period = static_cast<double>(period);
  for (BoundKind kind : {BoundKind::kPowerGenInductive, BoundKind::kPowerGenShortPrior,
                         BoundKind::kPowerGenLongPrior}) {
    report.add_bound(std::string(to_string(kind)),
                     bound_eval_min_nu(kind, bp, options.nu_min, options.nu_max));
  }
  report.add_bound("trivial", static_cast<double>(length));
  if (!is_ordinary(curve, group_order)) {
    report.warnings.push_back("curve is not ordinary");
  }
  return report;
}

}  // namespace ecsum
