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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ecsum/bounds.hpp"
#include "ecsum/curves.hpp"
#include "ecsum/error.hpp"
#include "ecsum/limits.hpp"
#include "ecsum/report.hpp"

namespace ecsum {

// A deduplicated, sorted set of points on one curve.
class PointSet {
 public:
  PointSet(Curve curve, std::vector<Point> points) : curve_(std::move(curve)) {
    for (const Point& p : points) curve_.require_on_curve(p);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    points_ = std::move(points);
  }

  const Curve& curve() const { return curve_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  Curve curve_;
  std::vector<Point> points_;
};

inline void require_same_curve(const PointSet& a, const PointSet& b) {
  if (!(a.curve() == b.curve())) {
    throw Error(ErrorKind::kCurveMismatch, "point sets live on different curves");
  }
}

struct SumProductSets {
  std::vector<Elem> u;  // {x(R) + x(S)}
  std::vector<Elem> v;  // {x(R + S)}
};

// U and V for point sets R, S. An element whose defining x-coordinate is
// undefined is not produced.
inline SumProductSets sum_product_sets(const PointSet& r, const PointSet& s) {
  require_same_curve(r, s);
  const Curve& curve = r.curve();
  const Field& f = curve.field();
  std::vector<bool> in_u(f.size(), false), in_v(f.size(), false);
  for (const Point& a : r.points()) {
    for (const Point& b : s.points()) {
      if (!a.is_infinity() && !b.is_infinity()) in_u[f.add(a.x(), b.x())] = true;
      const Point c = curve.add(a, b);
      if (!c.is_infinity()) in_v[c.x()] = true;
    }
  }
  SumProductSets out;
  for (Elem x = 0; x < f.size(); ++x) {
    if (in_u[x]) out.u.push_back(x);
    if (in_v[x]) out.v.push_back(x);
  }
  return out;
}

inline Json sum_product_report(const PointSet& r, const PointSet& s) {
  const SumProductSets sets = sum_product_sets(r, s);
  const double q = static_cast<double>(r.curve().field().size());
  BoundParams bp;
  bp.q = q;
  bp.size_a = static_cast<double>(r.size());
  bp.size_b = static_cast<double>(s.size());
  const double product = static_cast<double>(sets.u.size()) * sets.v.size();
  const double lower = bound_eval(BoundKind::kSumProduct, bp);
  const double prior = bound_eval(BoundKind::kSumProductPrior, bp);
  Json j;
  j["kind"] = "sumprod";
  j["q"] = r.curve().field().size();
  j["size_r"] = r.size();
  j["size_s"] = s.size();
  j["size_u"] = sets.u.size();
  j["size_v"] = sets.v.size();
  j["product"] = product;
  j["bounds"] = Json::array(
      {Json{{"name", std::string(to_string(BoundKind::kSumProduct))},
            {"value", lower},
            {"ratio", lower > 0 ? product / lower : INFINITY}},
       Json{{"name", std::string(to_string(BoundKind::kSumProductPrior))},
            {"value", prior},
            {"ratio", prior > 0 ? product / prior : INFINITY}}});
  return j;
}

struct PointSetQuad {
  PointSet s, t, u, v;
};

inline void check_quad(const PointSetQuad& quad, const Limits& limits) {
  require_same_curve(quad.s, quad.t);
  require_same_curve(quad.s, quad.u);
  require_same_curve(quad.s, quad.v);
  const double work = static_cast<double>(quad.s.size()) * quad.t.size() +
                      static_cast<double>(quad.u.size()) * quad.v.size();
  if (work > limits.max_sarkozy_pairs) {
    throw Error(ErrorKind::kScaleLimitExceeded,
                "pair-loop work #S#T + #U#V exceeds the configured budget");
  }
}

// Number of (s, t, u, v) with x(s) + x(t) = x(u + v); quadruples touching
// an undefined x-coordinate are not counted. Tabulates x(s) + x(t) once and
// streams the u, v pairs against the table.
inline std::uint64_t sarkozy_count(const PointSetQuad& quad,
                                   const Limits& limits = kDefaultLimits) {
  check_quad(quad, limits);
  const Curve& curve = quad.s.curve();
  const Field& f = curve.field();
  std::vector<std::uint64_t> sums(f.size(), 0);
  for (const Point& a : quad.s.points()) {
    if (a.is_infinity()) continue;
    for (const Point& b : quad.t.points()) {
      if (b.is_infinity()) continue;
      ++sums[f.add(a.x(), b.x())];
    }
  }
  std::uint64_t count = 0;
  for (const Point& a : quad.u.points()) {
    for (const Point& b : quad.v.points()) {
      const Point c = curve.add(a, b);
      if (!c.is_infinity()) count += sums[c.x()];
    }
  }
  return count;
}

struct SarkozyReport {
  std::uint64_t count = 0;
  double main_term = 0.0;
  std::optional<double> rel_error;  // empty when the main term is 0
  bool threshold_met = false;
  std::uint64_t q = 0;
  std::uint64_t sizes[4] = {0, 0, 0, 0};
  double epsilon = 0.0;

  Json to_json() const {
    Json j;
    j["count"] = count;
    j["main_term"] = main_term;
    j["rel_error"] = rel_error ? Json(*rel_error) : Json(nullptr);
    j["threshold_met"] = threshold_met;
    j["q"] = q;
    j["sizes"] = Json::array({sizes[0], sizes[1], sizes[2], sizes[3]});
    j["epsilon"] = epsilon;
    return j;
  }
};

// Main term #S#T#U#V / q, the relative error of the count against it, and
// whether #S#T#U#V >= q^{3 + epsilon}.
inline SarkozyReport sarkozy_asymptotic_report(
    const PointSetQuad& quad, double epsilon = 0.0,
    const Limits& limits = kDefaultLimits) {
  SarkozyReport r;
  r.count = sarkozy_count(quad, limits);
  r.q = quad.s.curve().field().size();
  r.sizes[0] = quad.s.size();
  r.sizes[1] = quad.t.size();
  r.sizes[2] = quad.u.size();
  r.sizes[3] = quad.v.size();
  r.epsilon = epsilon;
  const double product = static_cast<double>(r.sizes[0]) * r.sizes[1] *
                         static_cast<double>(r.sizes[2]) * r.sizes[3];
  const double q = static_cast<double>(r.q);
  r.main_term = product / q;
  if (product > 0) {
    r.rel_error = std::abs(static_cast<double>(r.count) * q / product - 1.0);
  }
  r.threshold_met = product >= std::pow(q, 3.0 + epsilon);
  return r;
}

}  // namespace ecsum
