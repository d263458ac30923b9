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

using testing::random_point;
using testing::rel_diff;

Complex psi_x(const AdditiveCharacter& psi, const Point& p) {
  return p.is_infinity() ? Complex{} : psi(p.x());
}

TEST(SingleSum, TrivialGroupIsZero) {
  const Curve c = Curve::short_weierstrass(Field::prime(101), 1, 0);
  const auto s = group_structure(c);
  const AdditiveCharacter psi(c.field(), 1);
  const SumReport r = single_sum(Point::infinity(), psi, GroupCharacter(s, 1, 0));
  EXPECT_EQ(r.value, Complex{});
  EXPECT_EQ(r.params["T"], 1);
}

TEST(SingleSum, PrincipalCharacterOnCyclicGroup) {
  const Curve c = Curve::short_weierstrass(Field::prime(5), 1, 1);
  const auto s = group_structure(c);
  ASSERT_EQ(s->l(), 1u);
  for (const auto& psi : all_additive_characters(c.field())) {
    Complex expect{};
    for (const Point& p : enumerate_points(c)) expect += psi_x(psi, p);
    const SumReport r = single_sum(s->p1(), psi, GroupCharacter(s, 0, 0));
    EXPECT_LE(std::abs(r.value - expect), 1e-12);
    EXPECT_NEAR(r.abs, std::abs(r.value), 1e-15);
    ASSERT_NE(r.find_bound("single_sum"), nullptr);
    EXPECT_NEAR(r.find_bound("single_sum")->value, std::sqrt(5.0), 1e-12);
  }
}

TEST(SingleSum, TwistVariants) {
  const Curve c = Curve::weierstrass(Field::prime(37), 2, 3, 5);
  const auto s = group_structure(c);
  const AdditiveCharacter psi(c.field(), 4);
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const Point g = random_point(rng, s->points());
    const GroupCharacter chi(s, static_cast<std::uint32_t>(rng.below(s->m())),
                             static_cast<std::uint32_t>(rng.below(s->l())));
    Complex moving{}, fixed{};
    const std::int64_t t = static_cast<std::int64_t>(s->order_of(g));
    for (std::int64_t n = 0; n < t; ++n) {
      const Point p = c.mul(n, g);
      moving += psi_x(psi, p) * chi(p);
      fixed += psi_x(psi, p) * chi(g);
    }
    EXPECT_LE(std::abs(single_sum(g, psi, chi).value - moving), 1e-9);
    EXPECT_LE(std::abs(single_sum(g, psi, chi, SingleSumTwist::kFixedPoint).value - fixed), 1e-9);
  }
}

TEST(SingleSum, SupersingularWarns) {
  const Curve c = Curve::short_weierstrass(Field::prime(11), 0, 1);
  const auto s = group_structure(c);
  const SumReport r = single_sum(s->p1(), AdditiveCharacter(c.field(), 1), GroupCharacter(s, 1, 0));
  ASSERT_EQ(r.warnings.size(), 1u);
}

TEST(ResidueSet, Validation) {
  try {
    WeightedResidueSet(10, {{4, 1.0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidResidue);
  }
  EXPECT_THROW(WeightedResidueSet(10, {{3, 2.0}}), Error);
  EXPECT_THROW(WeightedResidueSet(10, {{3, 1.0}, {3, 0.5}}), Error);
  EXPECT_NO_THROW(WeightedResidueSet(10, {{3, 1.0}, {7, Complex(0.6, 0.8)}}));
}

TEST(BilinearMult, AgainstScalarMultiplication) {
  const Curve c = Curve::short_weierstrass(Field::prime(101), 1, 0);
  const auto s = group_structure(c);
  const Point g = s->p1();
  const std::uint64_t t = s->order_of(g);
  const AdditiveCharacter psi(c.field(), 1);
  EXPECT_LE(std::abs(bilinear_mult_sum(c, g, WeightedResidueSet(t, {{1, 1.0}}),
                                       WeightedResidueSet(t, {{1, 1.0}}), psi)
                         .value -
                     psi(g.x())),
            1e-14);
  EXPECT_EQ(bilinear_mult_sum(c, g, WeightedResidueSet(t, {}), WeightedResidueSet(t, {{1, 1.0}}), psi)
                .value,
            Complex{});
  Rng rng(8);
  std::vector<std::uint64_t> units;
  for (std::uint64_t r = 1; r < t; ++r) {
    if (std::gcd(r, t) == 1) units.push_back(r);
  }
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::pair<std::uint64_t, Complex>> ae, be;
    for (std::uint64_t r : rng.sample(units, 15)) ae.emplace_back(r, std::polar(1.0, rng.unit() * 6));
    for (std::uint64_t r : rng.sample(units, 9)) be.emplace_back(r, std::polar(rng.unit(), 1.0));
    Complex expect{};
    for (auto [a, wa] : ae) {
      for (auto [b, wb] : be) {
        expect += wa * wb * psi_x(psi, c.mul(static_cast<std::int64_t>(a * b), g));
      }
    }
    const WeightedResidueSet as(t, ae), bs(t, be);
    const SumReport r = bilinear_mult_sum(c, g, as, bs, psi);
    EXPECT_LE(std::abs(r.value - expect), 1e-9);
    EXPECT_LE(r.abs, as.l1_norm() * bs.l1_norm() + 1e-9);
    EXPECT_NE(r.find_bound("bilinear_multiplicative"), nullptr);
  }
  EXPECT_THROW(bilinear_mult_sum(c, g, WeightedResidueSet(t + 2, {}), WeightedResidueSet(t, {}), psi),
               Error);
}

TEST(BilinearAdd, ConventionsAndSingletons) {
  const Curve c = Curve::short_weierstrass(Field::prime(101), 3, 7);
  const auto pts = enumerate_points(c);
  const AdditiveCharacter psi(c.field(), 2);
  const Point p = pts[5], q = pts[17];
  EXPECT_LE(std::abs(bilinear_add_sum(WeightedPointSet::uniform(c, {p}),
                                      WeightedPointSet::uniform(c, {q}), psi)
                         .value -
                     psi_x(psi, c.add(p, q))),
            1e-15);
  EXPECT_EQ(bilinear_add_sum(WeightedPointSet::uniform(c, {p}),
                             WeightedPointSet::uniform(c, {c.neg(p)}), psi)
                .value,
            Complex{});
  const Curve other = Curve::short_weierstrass(Field::prime(101), 3, 8);
  try {
    bilinear_add_value(WeightedPointSet::uniform(c, {p}),
                       WeightedPointSet::uniform(other, {Point::infinity()}), psi);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCurveMismatch);
  }
  EXPECT_THROW(WeightedPointSet(c, {{p, 0.0}}), Error);
  EXPECT_THROW(WeightedPointSet(c, {{p, 1.0}, {p, 2.0}}), Error);
}

TEST(BilinearAdd, CharacterDecompositionMatchesDirectLoop) {
  Rng rng(31);
  std::vector<Curve> curves{Curve::short_weierstrass(Field::prime(101), 1, 0),
                            Curve::short_weierstrass(Field::prime(103), 2, 5),
                            Curve::koblitz(Field::binary(6), 1), Curve::glv(71)};
  for (const Curve& c : curves) {
    const auto s = group_structure(c);
    for (int trial = 0; trial < 6; ++trial) {
      const AdditiveCharacter psi(c.field(), static_cast<Elem>(1 + rng.below(c.field().size() - 1)));
      std::vector<std::pair<Point, Complex>> pe, qe;
      for (const Point& p : rng.sample(s->points(), 20)) pe.emplace_back(p, testing::random_weight(rng));
      for (const Point& p : rng.sample(s->points(), 20)) qe.emplace_back(p, testing::random_weight(rng));
      const WeightedPointSet ps(c, pe), qs(c, qe);
      const SumReport r = bilinear_add_sum(ps, qs, psi);
      ASSERT_LE(rel_diff(r.value, bilinear_add_sum_via_characters(ps, qs, psi, *s)), 1e-6);
      EXPECT_NEAR(r.find_bound("bilinear_additive")->value,
                  std::sqrt(c.field().size() * ps.norm_sq() * qs.norm_sq()), 1e-9);
      EXPECT_LE(r.abs, ps.l1_norm() * qs.l1_norm() + 1e-9);
    }
    const auto all = WeightedPointSet::uniform(c, s->points());
    const AdditiveCharacter psi(c.field(), 1);
    EXPECT_LE(rel_diff(bilinear_add_value(all, all, psi),
                       bilinear_add_sum_via_characters(all, all, psi, *s)),
              1e-6);
  }
}

TEST(Bounds, ClosedForms) {
  BoundParams p;
  p.q = 101;
  p.weight_r = 1;
  p.weight_t = 1;
  EXPECT_DOUBLE_EQ(bound_eval(BoundKind::kBilinearAdditive, p), std::sqrt(101.0));
  BoundParams t5;
  t5.q = 1009;
  t5.d = 16;
  EXPECT_DOUBLE_EQ(bound_eval(BoundKind::kStationaryTorsion, t5), 1009.0 / 4.0);
  BoundParams l2;
  l2.q = 211;
  l2.nu = 1;
  l2.size_a = 30;
  l2.size_b = 40;
  l2.order_T = 200;
  const double expect = std::pow(30.0, 0.5) * std::pow(40.0, 2.0 / 3.0) * std::pow(200.0, 2.0 / 3.0) *
                        std::pow(211.0, 1.0 / 12.0) * std::pow(std::log(211.0), 1.0 / 3.0);
  EXPECT_NEAR(bound_eval(BoundKind::kBilinearMultiplicative, l2), expect, 1e-9 * expect);
  BoundParams nb;
  nb.q = 97;
  nb.naf_count = 11;
  nb.ell = 5;
  EXPECT_DOUBLE_EQ(bound_eval(BoundKind::kNafBilinear, nb),
                   11 * std::sqrt(97.0) / 5 + std::sqrt(11 * 97.0));
  EXPECT_DOUBLE_EQ(bound_eval(BoundKind::kSingleSum, p), std::sqrt(101.0));
}

TEST(Bounds, ParameterErrors) {
  BoundParams p;
  p.q = 101;
  try {
    bound_eval(BoundKind::kBilinearAdditive, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParameterError);
  }
  p.nu = 0;
  p.size_a = 3;
  p.size_b = 3;
  EXPECT_THROW(bound_eval(BoundKind::kBilinearAdditivePrior, p), Error);
  p.nu = 2;
  EXPECT_NO_THROW(bound_eval(BoundKind::kBilinearAdditivePrior, p));
  EXPECT_LE(bound_eval_min_nu(BoundKind::kBilinearAdditivePrior, p),
            bound_eval(BoundKind::kBilinearAdditivePrior, p));
}

TEST(Stationary, Reductions) {
  const Curve c = Curve::weierstrass(Field::prime(103), 1, 4, 9);
  const auto pts = enumerate_points(c);
  const auto n_e = static_cast<std::int64_t>(pts.size());
  for (Elem a : {1u, 2u, 50u}) {
    const AdditiveCharacter psi(c.field(), 1);
    Complex plain{};
    for (const Point& p : pts) {
      if (!p.is_infinity()) plain += psi(c.field().mul(a, p.x()));
    }
    for (std::int64_t n : {1, 2, 5, 7}) {
      EXPECT_LE(std::abs(stationary_sum(c, n, a, 0, psi).value - plain), 1e-8);
    }
    for (Elem b : {0u, 1u, 77u}) {
      const SumReport r = stationary_sum(c, n_e, a, b, psi);
      EXPECT_LE(std::abs(r.value - plain), 1e-8);
      EXPECT_EQ(r.params["d"], pts.size());
      EXPECT_LE(std::abs(stationary_sum(c, 2 * n_e, a, b, psi).value - plain), 1e-8);
    }
  }
}

TEST(Stationary, DirectDefinition) {
  const Curve c = Curve::short_weierstrass(Field::prime(61), 5, 2);
  const Field& f = c.field();
  const AdditiveCharacter psi(f, 3);
  for (std::int64_t n : {2, 3, 4}) {
    Complex expect{};
    for (const Point& p : enumerate_points(c)) {
      if (p.is_infinity()) continue;
      const Point np = c.mul(n, p);
      const Elem second = np.is_infinity() ? 0 : f.mul(9, np.x());
      expect += psi(f.add(f.mul(4, p.x()), second));
    }
    const SumReport r = stationary_sum(c, n, 4, 9, psi);
    EXPECT_LE(std::abs(r.value - expect), 1e-9);
    EXPECT_EQ(r.bounds.size(), 4u);
  }
}

TEST(Stationary, TranslationAndTorsionAverage) {
  std::vector<Curve> curves{Curve::short_weierstrass(Field::prime(23), 22, 0),
                            Curve::short_weierstrass(Field::prime(101), 1, 0),
                            Curve::glv(43)};
  Rng rng(12);
  for (const Curve& c : curves) {
    const auto s = group_structure(c);
    const AdditiveCharacter psi(c.field(), 1);
    for (std::int64_t n : {1, 2, 3, 4, 6, 8}) {
      const Complex plain = stationary_sum(c, n, 3, 5, psi).value;
      const Point shift = random_point(rng, s->points());
      EXPECT_LE(rel_diff(stationary_sum_translated(*s, n, 3, 5, psi, shift), plain), 1e-9);
      EXPECT_LE(rel_diff(stationary_sum_torsion_average(*s, n, 3, 5, psi), plain), 1e-6)
          << c.describe() << " n=" << n;
    }
  }
}

TEST(Stationary, Errors) {
  const Curve c = Curve::short_weierstrass(Field::prime(5), 1, 1);
  const AdditiveCharacter psi(c.field(), 1);
  EXPECT_THROW(stationary_sum(c, 1, 0, 1, psi), Error);
  EXPECT_THROW(stationary_sum(c, 0, 1, 1, psi), Error);
  EXPECT_THROW(stationary_sum(c, -2, 1, 1, psi), Error);
}

TEST(PowerGenerator, BasicsAndPeriod) {
  const Curve c = Curve::short_weierstrass(Field::prime(101), 1, 0);
  const auto s = group_structure(c);
  const AdditiveCharacter psi(c.field(), 1);
  Rng rng(2);
  int checked = 0;
  for (const Point& g : s->points()) {
    const std::uint64_t t = s->order_of(g);
    for (std::int64_t e = 2; e < 12; ++e) {
      if (std::gcd<std::uint64_t>(e, t) != 1) continue;
      const std::uint64_t period = multiplicative_order(reduce_exponent(e, t), t);
      EXPECT_EQ(power_generator_period(c, g, e, t + 1), period);
      EXPECT_LE(std::abs(power_gen_sum(c, g, e, 1, psi).value - psi_x(psi, g)), 1e-15);
      std::set<Point> coset;
      Point w = g;
      for (std::uint64_t i = 0; i < period; ++i, w = c.mul(e, w)) coset.insert(w);
      Complex expect{};
      for (const Point& p : coset) expect += psi_x(psi, p);
      EXPECT_LE(std::abs(power_gen_sum(c, g, e, period, psi).value - expect), 1e-9);
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(PowerGenerator, Telescoping) {
  const Curve c = Curve::weierstrass(Field::prime(211), 3, 1, 4);
  const auto s = group_structure(c);
  const AdditiveCharacter psi(c.field(), 7);
  const Point g = s->p1();
  const std::uint64_t t = s->order_of(g);
  Rng rng(6);
  for (std::int64_t e : {2, 3, 5}) {
    if (std::gcd<std::uint64_t>(e, t) != 1) continue;
    const std::uint64_t period = multiplicative_order(reduce_exponent(e, t), t);
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint64_t n = 1 + rng.below(period);
      const std::uint64_t m = rng.below(n);
      Point wm = g, wn = g;
      for (std::uint64_t i = 0; i < m; ++i) wm = c.mul(e, wm);
      for (std::uint64_t i = 0; i < n; ++i) wn = c.mul(e, wn);
      const Complex lhs = power_gen_value(c, g, e, n, psi);
      const Complex rhs = power_gen_value(c, wm, e, n, psi) + power_gen_value(c, g, e, m, psi) -
                          power_gen_value(c, wn, e, m, psi);
      EXPECT_LE(std::abs(lhs - rhs), 1e-8);
    }
  }
}

TEST(PowerGenerator, Errors) {
  const Curve c = Curve::short_weierstrass(Field::prime(101), 1, 0);
  const auto s = group_structure(c);
  const AdditiveCharacter psi(c.field(), 1);
  const Point g = s->p1();
  const std::uint64_t t = s->order_of(g);
  EXPECT_THROW(power_gen_sum(c, g, static_cast<std::int64_t>(t), 1, psi), Error);
  const std::uint64_t period = multiplicative_order(3 % t, t);
  EXPECT_THROW(power_gen_sum(c, g, 3, period + 1, psi), Error);
  EXPECT_THROW(power_gen_sum(c, g, 3, 0, psi), Error);
  const SumReport r = power_gen_sum(c, g, 3, period, psi);
  EXPECT_NE(r.find_bound("powgen_inductive"), nullptr);
  EXPECT_NE(r.find_bound("powgen_short_prior"), nullptr);
  EXPECT_NE(r.find_bound("powgen_long_prior"), nullptr);
  EXPECT_EQ(power_gen_sum(c, Point::infinity(), 3, 1, psi).value, Complex{});
}

TEST(SumReport, JsonShape) {
  const Curve c = Curve::short_weierstrass(Field::prime(5), 1, 1);
  const SumReport r = stationary_sum(c, 2, 1, 1, AdditiveCharacter(c.field(), 1));
  const Json j = r.to_json();
  for (const char* key : {"kind", "sum_re", "sum_im", "abs", "params", "bounds"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  for (const Json& b : j["bounds"]) {
    EXPECT_NEAR(b["ratio"].get<double>(), r.abs / b["value"].get<double>(), 1e-15);
  }
}

}  // namespace
}  // namespace ecsum
