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
#include <limits>
#include <numbers>

#include "test_util.hpp"

namespace ecsum {
namespace {

using testing::naive_is_prime;

// Schoolbook GF(2)[x] multiplication reduced bit by bit.
std::uint64_t gf2_mul_oracle(std::uint64_t a, std::uint64_t b, std::uint64_t poly, unsigned n) {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < 64; ++i) {
    if ((b >> i) & 1) r ^= a << i;
  }
  for (int bit = 63; bit >= static_cast<int>(n); --bit) {
    if ((r >> bit) & 1) r ^= poly << (bit - n);
  }
  return r;
}

bool gf2_irreducible_oracle(std::uint64_t poly, unsigned n) {
  auto degree = [](std::uint64_t v) { return 63 - __builtin_clzll(v); };
  auto mod = [&](std::uint64_t a, std::uint64_t m) {
    while (a != 0 && degree(a) >= degree(m)) a ^= m << (degree(a) - degree(m));
    return a;
  };
  for (std::uint64_t d = 2; d < (std::uint64_t{1} << (n / 2 + 1)); ++d) {
    if (degree(d) > static_cast<int>(n / 2) || degree(d) < 1) continue;
    if (mod(poly, d) == 0) return false;
  }
  return true;
}

TEST(PrimeField, SmallArithmetic) {
  const Field f = Field::prime(7);
  EXPECT_EQ(f.add(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.mul(6, 6), 1u);
  EXPECT_EQ(f.pow(3, 6), 1u);
  EXPECT_EQ(f.from_int(-1), 6u);
}

TEST(PrimeField, RejectsBadModuli) {
  EXPECT_THROW(Field::prime(9), Error);
  EXPECT_THROW(Field::prime(2), Error);
  EXPECT_THROW(Field::prime((std::uint64_t{1} << 31) + 11), Error);
  EXPECT_NO_THROW(Field::prime(2147483647));
}

TEST(PrimeField, InverseOfZeroThrows) {
  const Field f = Field::prime(11);
  try {
    f.inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDivisionByZero);
  }
}

TEST(PrimeField, InverseExhaustiveAgainstSearch) {
  for (std::uint64_t p = 3; p <= 257; ++p) {
    if (!naive_is_prime(p)) continue;
    const Field f = Field::prime(p);
    for (Elem x = 1; x < p; ++x) {
      Elem found = 0;
      for (Elem y = 1; y < p; ++y) {
        if ((std::uint64_t{x} * y) % p == 1) found = y;
      }
      ASSERT_EQ(f.inv(x), found) << "p=" << p << " x=" << x;
      ASSERT_EQ(f.mul(x, f.inv(x)), 1u);
    }
  }
}

TEST(PrimeField, LargePrimeProductsStayExact) {
  const Field f = Field::prime(2147483647);
  const Elem a = 2147483646, b = 2147483645;
  const unsigned __int128 expect = (static_cast<unsigned __int128>(a) * b) % 2147483647u;
  EXPECT_EQ(f.mul(a, b), static_cast<Elem>(expect));
  EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
}

TEST(PrimeField, SqrtExamples) {
  EXPECT_EQ(Field::prime(7).sqrt(2), 3u);
  const Field f11 = Field::prime(11);
  EXPECT_EQ(f11.sqrt(f11.from_int(-7)), 2u);
  try {
    Field::prime(7).sqrt(3);
    FAIL();
  } catch (const NonResidueError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNonResidue);
    EXPECT_EQ(e.witness(), 6u);
    EXPECT_EQ(e.value(), 3u);
  }
}

TEST(PrimeField, SqrtExhaustiveSmallerRoot) {
  for (std::uint64_t p = 3; p <= 257; ++p) {
    if (!naive_is_prime(p)) continue;
    const Field f = Field::prime(p);
    std::vector<int> smallest(p, -1);
    for (std::uint64_t y = p; y-- > 0;) smallest[(y * y) % p] = static_cast<int>(y);
    for (Elem x = 0; x < p; ++x) {
      if (smallest[x] < 0) {
        EXPECT_THROW(f.sqrt(x), NonResidueError);
        EXPECT_FALSE(f.is_square(x));
      } else {
        ASSERT_EQ(f.sqrt(x), static_cast<Elem>(smallest[x])) << "p=" << p;
        ASSERT_EQ(f.sqr(f.sqrt(x)), x);
      }
    }
  }
}

TEST(PrimeField, SqrtLargeTwoAdicPrime) {
  // 7681 - 1 = 2^9 * 15 exercises several Tonelli-Shanks rounds.
  const Field f = Field::prime(7681);
  for (Elem y = 1; y < 7681; y += 37) {
    const Elem r = f.sqrt(f.sqr(y));
    EXPECT_TRUE(r == y || r == f.neg(y));
    EXPECT_LE(r, f.neg(r));
  }
}

TEST(PrimeField, TraceUnsupported) {
  try {
    Field::prime(7).trace(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedField);
  }
}

TEST(BinaryField, IrreducibilityMatchesBruteForce) {
  for (unsigned n = 1; n <= 10; ++n) {
    for (std::uint64_t poly = std::uint64_t{1} << n; poly < (std::uint64_t{2} << n); ++poly) {
      EXPECT_EQ(is_irreducible_gf2(poly), gf2_irreducible_oracle(poly, n)) << poly;
    }
  }
  EXPECT_THROW(Field::binary(3, 0b1001), Error);
  EXPECT_THROW(Field::binary(25), Error);
  EXPECT_NO_THROW(Field::binary(24));
}

TEST(BinaryField, F4Products) {
  const Field f = Field::binary(2, 0b111);
  const Elem w = 0b10;
  EXPECT_EQ(f.mul(w, w), 0b11u);
  EXPECT_EQ(f.trace(0), 0u);
  EXPECT_EQ(f.trace(w), 1u);
  EXPECT_EQ(Field::binary(3, 0b1011).trace(1), 1u);
}

TEST(BinaryField, MultiplicationAgainstSchoolbook) {
  for (unsigned n = 1; n <= 8; ++n) {
    const Field f = Field::binary(n);
    const std::uint64_t q = f.size();
    for (Elem x = 0; x < q; ++x) {
      for (Elem y = 0; y < q; ++y) {
        ASSERT_EQ(f.mul(x, y), gf2_mul_oracle(x, y, f.reduction_poly(), n));
      }
      if (x != 0) {
        ASSERT_EQ(f.mul(x, f.inv(x)), 1u) << "n=" << n << " x=" << x;
      }
    }
  }
}

TEST(BinaryField, TraceLinearAndSurjective) {
  for (unsigned n = 1; n <= 10; ++n) {
    const Field f = Field::binary(n);
    std::uint64_t ones = 0;
    for (Elem x = 0; x < f.size(); ++x) {
      Elem t = 0, y = x;
      for (unsigned i = 0; i < n; ++i) {
        t ^= y;
        y = static_cast<Elem>(gf2_mul_oracle(y, y, f.reduction_poly(), n));
      }
      ASSERT_EQ(f.trace(x), t);
      ASSERT_LE(t, 1u);
      ones += t;
      for (Elem z = 0; z < f.size(); z += 3) ASSERT_EQ(f.trace(x ^ z), f.trace(x) ^ f.trace(z));
    }
    EXPECT_EQ(ones, f.size() / 2) << n;
  }
}

TEST(FieldElement, MismatchThrows) {
  const auto a = FieldElement::from_int(Field::prime(7), 3);
  const auto b = FieldElement::from_int(Field::prime(11), 3);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kFieldMismatch);
  }
  EXPECT_EQ((a * a).repr(), 2u);
  EXPECT_EQ(a.inv().repr(), 5u);
  EXPECT_EQ((a / a).repr(), 1u);
}

TEST(AdditiveCharacter, Examples) {
  const Field f5 = Field::prime(5);
  const AdditiveCharacter psi(f5, 1);
  EXPECT_EQ(psi(0), Complex(1.0, 0.0));
  const Complex expect = std::polar(1.0, 4.0 * std::numbers::pi / 5.0);
  EXPECT_NEAR(std::abs(psi(2) - expect), 0.0, 1e-15);
  const Field f4 = Field::binary(2, 0b111);
  EXPECT_EQ(AdditiveCharacter(f4, 1)(0b10), Complex(-1.0, 0.0));
  try {
    AdditiveCharacter(f5, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrincipalCharacterForbidden);
  }
}

TEST(AdditiveCharacter, OrthogonalityPrime) {
  for (std::uint64_t p : {3u, 5u, 101u, 257u, 1009u}) {
    const Field f = Field::prime(p);
    for (const auto& psi : all_additive_characters(f)) {
      Complex s{};
      for (Elem x = 0; x < p; ++x) s += psi(x);
      ASSERT_LE(std::abs(s), 1e-9 * p) << p;
    }
  }
}

TEST(AdditiveCharacter, OrthogonalityBinaryExact) {
  for (unsigned n = 1; n <= 8; ++n) {
    const Field f = Field::binary(n);
    for (const auto& psi : all_additive_characters(f)) {
      int s = 0;
      for (Elem x = 0; x < f.size(); ++x) s += psi.sign(x);
      ASSERT_EQ(s, 0);
    }
  }
}

TEST(AdditiveCharacter, MultiplicativityWithinFourUlp) {
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::uint64_t p : {7u, 101u, 1009u}) {
    const Field f = Field::prime(p);
    const AdditiveCharacter psi(f, 3);
    for (Elem x = 0; x < p; ++x) {
      for (Elem y = 0; y < p; y += (p > 200 ? 7 : 1)) {
        ASSERT_LE(std::abs(psi(f.add(x, y)) - psi(x) * psi(y)), 4 * eps) << p;
      }
    }
  }
  const Field f = Field::binary(6);
  const AdditiveCharacter psi(f, 5);
  for (Elem x = 0; x < f.size(); ++x) {
    for (Elem y = 0; y < f.size(); ++y) ASSERT_EQ(psi(x ^ y), psi(x) * psi(y));
  }
}

TEST(AdditiveCharacter, LargeFieldWithoutTable) {
  const Field f = Field::prime(2147483647);
  const AdditiveCharacter psi(f, 1);
  EXPECT_NEAR(std::abs(psi(12345)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(psi(f.add(5, 7)) - psi(5) * psi(7)), 0.0, 1e-12);
}

TEST(UnitRoot, MatchesPolar) {
  for (std::uint64_t n : {1u, 2u, 3u, 8u, 97u, 1000u}) {
    for (std::uint64_t k = 0; k < n; ++k) {
      const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
      ASSERT_LE(std::abs(unit_root(k, n) - z), 1e-14);
    }
  }
  EXPECT_EQ(unit_root(1, 4), Complex(0.0, 1.0));
  EXPECT_EQ(unit_root(2, 4), Complex(-1.0, 0.0));
}

}  // namespace
}  // namespace ecsum
