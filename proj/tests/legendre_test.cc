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

#include "flbessel/legendre.h"

#include <gtest/gtest.h>

#include <vector>

#include "test_util.h"

namespace flbessel {
namespace {

using testing::AgreeRelative;

// Textbook closed forms of P_0..P_6.
Rat TextbookP(int L, const Rat& x) {
  const Rat x2 = x * x;
  switch (L) {
    case 0: return 1;
    case 1: return x;
    case 2: return (3 * x2 - 1) / 2;
    case 3: return (5 * x2 - 3) * x / 2;
    case 4: return (35 * x2 * x2 - 30 * x2 + 3) / 8;
    case 5: return (63 * x2 * x2 - 70 * x2 + 15) * x / 8;
    case 6: return (231 * x2 * x2 * x2 - 315 * x2 * x2 + 105 * x2 - 5) / 16;
  }
  return 0;
}

TEST(EvalPTest, MatchesTextbookPolynomials) {
  for (const Rat& x : {MakeRat(-1, 1), MakeRat(-2, 3), MakeRat(0, 1),
                       MakeRat(1, 7), MakeRat(1, 1), MakeRat(5, 2)}) {
    for (int L = 0; L <= 6; ++L) {
      EXPECT_EQ(EvalP(L, x), TextbookP(L, x)) << "L=" << L;
    }
  }
}

TEST(EvalPTest, EndpointsAreSignedOne) {
  for (int L = 0; L <= 40; ++L) {
    EXPECT_EQ(EvalP(L, Rat(1)), 1);
    EXPECT_EQ(EvalP(L, Rat(-1)), L % 2 == 0 ? 1 : -1);
  }
}

TEST(EvalPTest, RealAgreesWithRational) {
  const Rat x = MakeRat(3, 7);
  for (int L = 0; L <= 45; L += 5) {
    const BigReal real = EvalP(L, BigReal(x, 60), 50);
    EXPECT_TRUE(AgreeRelative(real, BigReal(EvalP(L, x), 60), 48)) << L;
  }
}

TEST(EvalPTest, AllDegreesAtOnce) {
  const Rat x = MakeRat(-3, 5);
  const std::vector<Rat> all = EvalPAll(12, x);
  ASSERT_EQ(all.size(), 13u);
  for (int L = 0; L <= 12; ++L) EXPECT_EQ(all[static_cast<size_t>(L)], EvalP(L, x));
  EXPECT_THROW(EvalP(-1, x), DomainError);
}

TEST(MonomialsTest, SixthDegreeCoefficients) {
  const LegendreMonomials m = Monomials(6);
  ASSERT_EQ(m.degree, 6);
  ASSERT_EQ(m.coeffs.size(), 7u);
  EXPECT_EQ(m.coeffs[0], MakeRat(-5, 16));
  EXPECT_EQ(m.coeffs[1], 0);
  EXPECT_EQ(m.coeffs[2], MakeRat(105, 16));
  EXPECT_EQ(m.coeffs[4], MakeRat(-315, 16));
  EXPECT_EQ(m.coeffs[6], MakeRat(231, 16));
}

TEST(MonomialsTest, TableEvaluatesLikeRecurrence) {
  const std::vector<LegendreMonomials> table = MonomialTable(30);
  const Rat x = MakeRat(5, 11);
  for (int L = 0; L <= 30; ++L) {
    Rat value = 0;
    Rat power = 1;
    for (const Rat& c : table[static_cast<size_t>(L)].coeffs) {
      value += c * power;
      power *= x;
    }
    EXPECT_EQ(value, EvalP(L, x)) << L;
  }
}

TEST(LeadingCoefficientTest, CentralBinomialForm) {
  for (int L = 0; L <= 30; ++L) {
    BigInt two_l;
    mpz_ui_pow_ui(two_l.get_mpz_t(), 2, static_cast<unsigned long>(L));
    const Rat expected = MakeRat(Binomial(2 * L, L), two_l);
    EXPECT_EQ(LeadingCoefficient(L), expected);
    EXPECT_EQ(Monomials(L).coeffs.back(), expected);
  }
}

TEST(EvalPVia2F1Test, AgreesWithRecurrence) {
  for (const Rat& x : {MakeRat(1, 3), MakeRat(-4, 5), MakeRat(7, 2)}) {
    for (int L = 0; L <= 25; ++L) {
      EXPECT_EQ(EvalPVia2F1(L, x), EvalP(L, x)) << "L=" << L;
    }
  }
  EXPECT_THROW(EvalPVia2F1(4, Rat(0)), ZeroArgument);
}

// Moment integrals against direct integration of the monomial expansion.
TEST(MomentIntegralTest, MatchesMonomialIntegration) {
  for (int L = 0; L <= 20; ++L) {
    const LegendreMonomials mono = Monomials(L);
    for (int m = 0; m <= 30; ++m) {
      Rat direct = 0;
      for (size_t j = 0; j < mono.coeffs.size(); ++j) {
        const long power = m + static_cast<long>(j);
        if (power % 2 == 0) direct += mono.coeffs[j] * MakeRat(2, power + 1);
      }
      EXPECT_EQ(MomentIntegral(m, L), direct) << "m=" << m << " L=" << L;
    }
  }
  EXPECT_EQ(MomentIntegral(3, 5), 0);
  EXPECT_EQ(MomentIntegral(4, 3), 0);
  EXPECT_THROW(MomentIntegral(-1, 0), DomainError);
}

}  // namespace
}  // namespace flbessel
