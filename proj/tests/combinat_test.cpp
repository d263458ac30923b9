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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "test_util.hpp"

namespace ecsum {
namespace {

PointSet random_set(Rng& rng, const Curve& c, const std::vector<Point>& pts, std::size_t n) {
  return PointSet(c, rng.sample(pts, n));
}

std::uint64_t brute_force_sarkozy(const PointSetQuad& q) {
  const Curve& c = q.s.curve();
  const Field& f = c.field();
  std::uint64_t n = 0;
  for (const Point& s : q.s.points()) {
    for (const Point& t : q.t.points()) {
      for (const Point& u : q.u.points()) {
        for (const Point& v : q.v.points()) {
          const Point w = c.add(u, v);
          if (s.is_infinity() || t.is_infinity() || w.is_infinity()) continue;
          if (f.add(s.x(), t.x()) == w.x()) ++n;
        }
      }
    }
  }
  return n;
}

TEST(PointSetTest, DeduplicatesAndChecks) {
  const Curve c = Curve::short_weierstrass(Field::prime(101), 1, 3);
  const auto pts = enumerate_points(c);
  const PointSet s(c, {pts[4], pts[2], pts[4]});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.points()[0], pts[2]);
  EXPECT_THROW(PointSet(c, {Point::affine(0, 0)}), Error);
  const Curve other = Curve::short_weierstrass(Field::prime(101), 2, 3);
  EXPECT_THROW(sum_product_sets(s, PointSet(other, {})), Error);
}

TEST(SumProduct, SmallExamples) {
  const Curve c = Curve::short_weierstrass(Field::prime(101), 1, 3);
  const Field& f = c.field();
  for (const Point& p : enumerate_points(c)) {
    if (p.is_infinity() || c.dbl(p).is_infinity()) continue;
    const PointSet one(c, {p});
    auto sets = sum_product_sets(one, one);
    EXPECT_EQ(sets.u, std::vector<Elem>{f.add(p.x(), p.x())});
    EXPECT_EQ(sets.v, std::vector<Elem>{c.dbl(p).x()});
    const PointSet pm(c, {p, c.neg(p)});
    sets = sum_product_sets(pm, pm);
    EXPECT_EQ(sets.u, std::vector<Elem>{f.add(p.x(), p.x())});
    EXPECT_EQ(sets.v, std::vector<Elem>{c.dbl(p).x()});
    break;
  }
  const PointSet inf(c, {Point::infinity()});
  const auto sets = sum_product_sets(inf, inf);
  EXPECT_TRUE(sets.u.empty());
  EXPECT_TRUE(sets.v.empty());
}

TEST(SumProduct, OracleAndSizeCaps) {
  Rng rng(7);
  for (std::uint64_t p : {101u, 211u}) {
    const Curve c = testing::random_short_curve(rng, p);
    const auto pts = enumerate_points(c);
    const Field& f = c.field();
    for (int trial = 0; trial < 10; ++trial) {
      const PointSet r = random_set(rng, c, pts, 1 + rng.below(15));
      const PointSet s = random_set(rng, c, pts, 1 + rng.below(15));
      std::set<Elem> u, v;
      for (const Point& a : r.points()) {
        for (const Point& b : s.points()) {
          if (!a.is_infinity() && !b.is_infinity()) u.insert(f.add(a.x(), b.x()));
          const Point w = c.add(a, b);
          if (!w.is_infinity()) v.insert(w.x());
        }
      }
      const auto sets = sum_product_sets(r, s);
      EXPECT_EQ(sets.u, std::vector<Elem>(u.begin(), u.end()));
      EXPECT_EQ(sets.v, std::vector<Elem>(v.begin(), v.end()));
      EXPECT_LE(sets.u.size(), r.size() * s.size());
      EXPECT_LE(sets.v.size(), r.size() * s.size());
      const Json j = sum_product_report(r, s);
      EXPECT_EQ(j["size_u"], sets.u.size());
      EXPECT_EQ(j["bounds"].size(), 2u);
    }
  }
}

TEST(Sarkozy, MatchesQuadrupleLoop) {
  Rng rng(12);
  for (std::uint64_t p : {11u, 13u, 53u, 101u}) {
    const Curve c = testing::random_short_curve(rng, p);
    const auto pts = enumerate_points(c);
    for (int trial = 0; trial < 8; ++trial) {
      PointSetQuad q{random_set(rng, c, pts, rng.below(13)), random_set(rng, c, pts, rng.below(13)),
                     random_set(rng, c, pts, rng.below(13)), random_set(rng, c, pts, rng.below(13))};
      EXPECT_EQ(sarkozy_count(q), brute_force_sarkozy(q));
    }
  }
}

TEST(Sarkozy, Symmetries) {
  Rng rng(3);
  const Curve c = testing::random_short_curve(rng, 211);
  const auto pts = enumerate_points(c);
  for (int trial = 0; trial < 5; ++trial) {
    const PointSet s = random_set(rng, c, pts, 30), t = random_set(rng, c, pts, 25),
                   u = random_set(rng, c, pts, 20), v = random_set(rng, c, pts, 35);
    const std::uint64_t base = sarkozy_count({s, t, u, v});
    EXPECT_EQ(sarkozy_count({t, s, u, v}), base);
    EXPECT_EQ(sarkozy_count({s, t, v, u}), base);
    // Shifting U by r and V by -r leaves every sum u + v unchanged.
    const Point r = testing::random_point(rng, pts);
    std::vector<Point> ur, vr;
    for (const Point& a : u.points()) ur.push_back(c.add(a, r));
    for (const Point& a : v.points()) vr.push_back(c.sub(a, r));
    EXPECT_EQ(sarkozy_count({s, t, PointSet(c, ur), PointSet(c, vr)}), base);
  }
}

TEST(Sarkozy, Singletons) {
  const Curve c = Curve::short_weierstrass(Field::prime(101), 1, 3);
  const Field& f = c.field();
  const auto pts = enumerate_points(c);
  for (std::size_t i = 1; i < 6; ++i) {
    const Point a = pts[i], b = pts[i + 3], u = pts[i + 7], v = pts[i + 11];
    const Point w = c.add(u, v);
    const std::uint64_t expect = !w.is_infinity() && f.add(a.x(), b.x()) == w.x();
    EXPECT_EQ(sarkozy_count({PointSet(c, {a}), PointSet(c, {b}), PointSet(c, {u}), PointSet(c, {v})}),
              expect);
  }
}

TEST(Sarkozy, ReportEdgeCases) {
  const Curve c = Curve::short_weierstrass(Field::prime(53), 1, 3);
  const auto pts = enumerate_points(c);
  const PointSet all(c, pts), none(c, {});
  const SarkozyReport empty = sarkozy_asymptotic_report({none, all, all, all});
  EXPECT_EQ(empty.count, 0u);
  EXPECT_FALSE(empty.rel_error.has_value());
  EXPECT_TRUE(empty.to_json()["rel_error"].is_null());
  const SarkozyReport full = sarkozy_asymptotic_report({all, all, all, all});
  EXPECT_TRUE(full.threshold_met);
  EXPECT_DOUBLE_EQ(full.main_term, std::pow(static_cast<double>(pts.size()), 4) / 53.0);
  ASSERT_TRUE(full.rel_error.has_value());
  EXPECT_LT(*full.rel_error, 0.2);
  Limits tight;
  tight.max_sarkozy_pairs = 10;
  EXPECT_THROW(sarkozy_count({all, all, all, all}, tight), Error);
}

}  // namespace
}  // namespace ecsum
