// Copyright 2026 The flbessel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "flbessel/hypergeom.h"

#include <gtest/gtest.h>

#include <vector>

#include "test_util.h"

namespace flbessel {
namespace {

using testing::AgreeRelative;

// Direct term-by-term summation from Pochhammer products, no recurrence.
Rat BruteForcePfq(const std::vector<Rat>& upper, const std::vector<Rat>& lower,
                  const Rat& z, int terms) {
  Rat sum = 0;
  Rat zn = 1;
  for (int n = 0; n < terms; ++n) {
    Rat t = zn / Rat(Factorial(n));
    for (const Rat& a : upper) t *= Pochhammer(a, n);
    for (const Rat& b : lower) t /= Pochhammer(b, n);
    sum += t;
    zn *= z;
  }
  return sum;
}

// 1 / Gamma(c) for integer or half-integer c, as (rational, sqrt(pi) power).
// Uses Gamma(c) = Gamma(c + 1) / c; zero at nonpositive integers.
struct RecipGamma {
  Rat rational;
  int inverse_sqrt_pi = 0;
};

RecipGamma RecipGammaOracle(const Rat& c) {
  if (c.get_den() == 1 && c <= 0) return {0, 0};
  Rat scale = 1;
  Rat x = c;
  while (x <= 0) {
    scale *= x;
    x += 1;
  }
  const HalfIntGamma g = GammaHalfIntExact(Rat(x * 2).get_num().get_si());
  return {scale / g.rational, g.times_sqrt_pi ? 1 : 0};
}

BigReal BruteForceRegularized(const std::vector<Rat>& upper,
                              const std::vector<Rat>& lower, const Rat& z,
                              int terms, int digits) {
  BigReal sum(digits);
  Rat zn = 1;
  const BigReal inv_sqrt_pi = BigReal(1L, digits) / SqrtPi(digits);
  for (int n = 0; n < terms; ++n) {
    Rat t = zn / Rat(Factorial(n));
    int pi_power = 0;
    for (const Rat& a : upper) t *= Pochhammer(a, n);
    for (const Rat& b : lower) {
      const RecipGamma r = RecipGammaOracle(b + n);
      t *= r.rational;
      pi_power += r.inverse_sqrt_pi;
    }
    BigReal term(t, digits);
    for (int i = 0; i < pi_power; ++i) term *= inv_sqrt_pi;
    sum += term;
    zn *= z;
  }
  return sum;
}

HypParams Params(std::vector<Rat> upper, std::vector<Rat> lower,
                 const Rat& z) {
  HypParams p;
  p.upper = std::move(upper);
  p.lower = std::move(lower);
  p.argument = z;
  return p;
}

TEST(HypPfqTest, ZeroArgumentGivesOne) {
  const HypParams p = Params({MakeRat(1, 2)}, {1, MakeRat(3, 2)}, 0);
  EXPECT_EQ(HypPfq(p, 30).ToString(), "1.00000000000000000000000000000");
}

TEST(HypPfqTest, FirstCoefficientValue) {
  const HypParams p =
      Params({MakeRat(1, 2)}, {1, MakeRat(3, 2)}, MakeRat(-1, 4));
  EXPECT_EQ(HypPfq(p, 34).ToString(), "0.9197304100897602393144211940806200");
}

TEST(HypPfqTest, MatchesBruteForceTwoFThree) {
  const HypParams p = Params({MakeRat(1, 2), 1}, {MakeRat(3, 2), 1, 1},
                             MakeRat(-1, 4));
  const BigReal expected(
      BruteForcePfq(p.upper, p.lower, MakeRat(-1, 4), 200), 80);
  EXPECT_TRUE(AgreeRelative(HypPfq(p, 60), expected, 59));
}

TEST(HypPfqTest, MatchesBruteForceOverParameterGrid) {
  for (int L = 0; L <= 30; L += 3) {
    for (const Rat& z : {MakeRat(-1, 4), MakeRat(-1, 1), MakeRat(1, 1),
                         MakeRat(-25, 4)}) {
      const Rat half_l = MakeRat(L, 2);
      const HypParams p = Params({half_l + MakeRat(1, 2)},
                                 {half_l + 1, MakeRat(2 * L + 3, 2)}, z);
      const BigReal expected(BruteForcePfq(p.upper, p.lower, z, 150), 70);
      EXPECT_TRUE(AgreeRelative(HypPfq(p, 50), expected, 49))
          << "L=" << L << " z=" << z.get_str();
    }
  }
}

TEST(HypPfqTest, BigRealArgumentMatchesRational) {
  HypParams exact = Params({MakeRat(3, 2)}, {2, MakeRat(5, 2)}, MakeRat(-9, 4));
  HypParams real = exact;
  real.argument = BigReal(MakeRat(-9, 4), 60);
  EXPECT_TRUE(AgreeRelative(HypPfq(real, 40), HypPfq(exact, 40), 39));
}

TEST(HypPfqTest, PoleInLowerParameter) {
  const HypParams p = Params({1}, {-2, MakeRat(3, 2)}, MakeRat(-1, 4));
  EXPECT_THROW(HypPfq(p, 20), LowerParamPole);
}

TEST(HypPfqTest, UnsupportedShape) {
  HypParams p;
  p.upper = {1, 2};
  p.lower = {3};
  p.argument = Rat(1);
  EXPECT_THROW(HypPfq(p, 20), ShapeUnsupported);
}

TEST(HypPfqTest, CapExceededForLargeArgument) {
  // Terms peak near n ~ z^(1/3) and need far more than the cap at 10 digits.
  const HypParams p = Params({1}, {1, 1}, Rat(BigInt("1000000000000")));
  EXPECT_THROW(HypPfq(p, 10), SeriesCapExceeded);
}

TEST(HypPfqRegularizedTest, ZeroArgumentIsReciprocalGammaProduct) {
  const HypParams p = Params({MakeRat(1, 2), 1}, {1, 2, MakeRat(3, 2)}, 0);
  // 1 / (Gamma(1) Gamma(2) Gamma(3/2)) = 2 / sqrt(pi)
  const BigReal expected = BigReal(2L, 60) / SqrtPi(60);
  EXPECT_TRUE(AgreeRelative(HypPfqRegularized(p, 40), expected, 39));
}

TEST(HypPfqRegularizedTest, NonPositiveIntegerLowerParameter) {
  for (int m = 0; m <= 4; ++m) {
    const HypParams p = Params({MakeRat(1, 2), MakeRat(3, 2)},
                               {Rat(-m), MakeRat(5, 2), 2}, MakeRat(-1, 4));
    const BigReal expected =
        BruteForceRegularized(p.upper, p.lower, MakeRat(-1, 4), 120, 70);
    EXPECT_TRUE(AgreeRelative(HypPfqRegularized(p, 50), expected, 48))
        << "m=" << m;
  }
}

TEST(HypPfqRegularizedTest, NegativeHalfIntegerLowerParameter) {
  const HypParams p = Params({1}, {MakeRat(-3, 2), 1}, MakeRat(1, 3));
  const BigReal expected =
      BruteForceRegularized(p.upper, p.lower, MakeRat(1, 3), 120, 70);
  EXPECT_TRUE(AgreeRelative(HypPfqRegularized(p, 50), expected, 48));
}

TEST(HypPfqRegularizedTest, RejectsThirdIntegerParameters) {
  const HypParams p = Params({1}, {MakeRat(1, 3), 1}, MakeRat(1, 3));
  EXPECT_THROW(HypPfqRegularized(p, 20), ShapeUnsupported);
}

TEST(HypTermsExactTest, FollowsTermRecurrence) {
  const HypParams p =
      Params({MakeRat(1, 2)}, {1, MakeRat(3, 2)}, MakeRat(-1, 4));
  const std::vector<Rat> terms = HypTermsExact(p, 4);
  ASSERT_EQ(terms.size(), 4u);
  EXPECT_EQ(terms[0], 1);
  // (1/2) / (1 * 3/2) * (-1/4) = -1/12
  EXPECT_EQ(terms[1], MakeRat(-1, 12));
  Rat sum = 0;
  for (const Rat& t : terms) sum += t;
  EXPECT_EQ(sum, BruteForcePfq(p.upper, p.lower, MakeRat(-1, 4), 4));
}

TEST(HypTermCapTest, GrowsWithDigits) {
  EXPECT_EQ(HypTermCap(50), 700);
  EXPECT_LT(HypTermCap(10), HypTermCap(100));
}

}  // namespace
}  // namespace flbessel
