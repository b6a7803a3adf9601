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

#include "flbessel/sumverify.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "test_util.h"

namespace flbessel {
namespace {

using testing::AbsDiff;
using testing::Tol;

SumSpec Spec(Family family, int h, int l_terms, const Rat& k = 1) {
  SumSpec spec;
  spec.family = family;
  spec.h = h;
  spec.k = k;
  spec.l_terms = l_terms;
  spec.digits = 50;
  return spec;
}

TEST(SummandBracketTest, VanishesBeforeIndexH) {
  for (int h = 0; h <= 20; ++h) {
    for (int L = 0; L < 2 * h; L += 2) {
      for (Variant v :
           {Variant::kPochhammer, Variant::kReflected, Variant::kGammaForm}) {
        EXPECT_EQ(SummandBracket(Family::kJ0, v, h, L), 0);
      }
    }
    EXPECT_NE(SummandBracket(Family::kJ0, Variant::kPochhammer, h, 2 * h), 0);
  }
}

TEST(SummandBracketTest, RejectsWrongParity) {
  EXPECT_THROW(SummandBracket(Family::kJ0, Variant::kPochhammer, 0, 3),
               DomainError);
  EXPECT_THROW(SummandBracket(Family::kJ1, Variant::kReflected, 0, 2),
               DomainError);
}

TEST(SummedSeriesTest, UnitIdentityAtHZero) {
  EXPECT_TRUE(AbsDiff(SummedSeriesLhs(Spec(Family::kJ0, 0, 44)),
                      BigReal(1L, 50)) < Tol(33));
  EXPECT_TRUE(AbsDiff(SummedSeriesLhs(Spec(Family::kJ1, 0, 45)),
                      BigReal(MakeRat(1, 2), 50)) < Tol(33));
}

TEST(SummedSeriesTest, MatchesPowerCoefficientAtHOne) {
  EXPECT_TRUE(AbsDiff(SummedSeriesLhs(Spec(Family::kJ0, 1, 46)),
                      BigReal(MakeRat(-1, 4), 50)) < Tol(30));
}

TEST(SummedSeriesTest, PartialsReproduceConvergenceTable) {
  const std::vector<BigReal> partials =
      SummedSeriesPartials(Spec(Family::kJ0, 0, 17));
  ASSERT_EQ(partials.size(), 17u);
  EXPECT_EQ(partials[0].Rounded(48).ToString(),
            "0.919730410089760239314421194080619970661964806513");
  EXPECT_EQ(partials[1].Rounded(48).ToString(),
            "0.998701439402686183101278177652801821334364120020");
}

TEST(SummedSeriesTest, UnderTruncationFails) {
  const IdentityReport r =
      VerifyIdentity(Spec(Family::kJ0, 0, 5), Tol(33));
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.rel_diff > Tol(12));
}

TEST(SummedSeriesTest, VariantsGiveSameSum) {
  SummedSeries series(Family::kJ1, MakeRat(1, 2), 40);
  const BigReal a = series.Sum(Variant::kPochhammer, 3, 60);
  const BigReal b = series.Sum(Variant::kReflected, 3, 60);
  const BigReal c = series.Sum(Variant::kGammaForm, 3, 60);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(RhsTest, ClosedForms) {
  EXPECT_EQ(SummedSeriesRhsExact(Family::kJ0, 0, 1), 1);
  EXPECT_EQ(SummedSeriesRhsExact(Family::kJ0, 2, 1), MakeRat(1, 64));
  EXPECT_EQ(SummedSeriesRhsExact(Family::kJ0, 1, 2), -1);
  EXPECT_EQ(SummedSeriesRhsExact(Family::kJ1, 0, 3), MakeRat(3, 2));
  EXPECT_EQ(SummedSeriesRhsExact(Family::kJ1, 1, 1), MakeRat(-1, 16));
  EXPECT_THROW(SummedSeriesRhsExact(Family::kJ0, -1, 1), DomainError);
}

TEST(VerifyIdentityTest, ScaledIdentities) {
  for (const Rat& k : {MakeRat(1, 2), MakeRat(2, 1)}) {
    SummedSeries j0(Family::kJ0, k, 40);
    SummedSeries j1(Family::kJ1, k, 40);
    for (int h = 0; h <= 10; h += 5) {
      SumSpec spec = Spec(Family::kJ0, h, h + 80, k);
      spec.digits = 40;
      EXPECT_TRUE(VerifyIdentity(j0, spec, Tol(30)).pass) << h;
      spec.family = Family::kJ1;
      EXPECT_TRUE(VerifyIdentity(j1, spec, Tol(30)).pass) << h;
    }
  }
}

TEST(CauchyCheckTest, BoundsAndIndices) {
  const std::vector<BigReal> partials =
      SummedSeriesPartials(Spec(Family::kJ0, 0, 17));
  EXPECT_TRUE(CauchyCheck(partials, 10, 9, Tol(21)));
  EXPECT_TRUE(CauchyCheck(partials, 16, 15, BigReal::Parse("2e-46", 10)));
  EXPECT_FALSE(CauchyCheck(partials, 2, 1, Tol(10)));
  EXPECT_THROW(CauchyCheck(partials, 17, 1, Tol(10)), std::out_of_range);
  EXPECT_THROW(CauchyCheck(partials, 3, 3, Tol(10)), std::out_of_range);
}

TEST(NamesTest, RoundTrip) {
  for (Variant v : {Variant::kPochhammer, Variant::kReflected, Variant::kGammaForm}) {
    EXPECT_EQ(ParseVariant(VariantName(v)), v);
  }
  EXPECT_EQ(ParseFamily(FamilyName(Family::kJ1)), Family::kJ1);
  EXPECT_THROW(ParseFamily("j2"), ParseError);
  EXPECT_EQ(DefaultLTerms(5), 85);
}

}  // namespace
}  // namespace flbessel
