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

#include "flbessel/series.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace flbessel {
namespace {

using testing::AbsDiff;
using testing::AgreeRelative;
using testing::Tol;

TEST(CoeffTest, LeadingValuesAtUnitScale) {
  EXPECT_EQ(CoeffA(0, 0, 1, 34).ToString(),
            "0.9197304100897602393144211940806200");
  EXPECT_EQ(CoeffA(1, 1, 1, 34).ToString(),
            "0.4635981705953810635941110039338702");
  EXPECT_EQ(CoeffAModified(0, 0, 1, 34).ToString(),
            "1.086521097023589815837941923492506");
  EXPECT_EQ(CoeffAModified(3, 1, 1, 34).ToString(),
            "0.02618069164825977449795296407260333");
}

TEST(CoeffTest, ParityGateGivesExactZero) {
  for (int N = 0; N <= 4; ++N) {
    for (int L = 0; L <= 12; ++L) {
      if ((L + N) % 2 == 0) continue;
      EXPECT_TRUE(CoeffA(L, N, 1, 30).is_zero());
      EXPECT_TRUE(CoeffAModified(L, N, MakeRat(3, 2), 30).is_zero());
      EXPECT_EQ(CoeffOracleExact(Kind::kJ, L, N, 1, 20), 0);
    }
  }
}

TEST(CoeffTest, RejectsNegativeIndices) {
  EXPECT_THROW(CoeffA(-1, 0, 1, 20), DomainError);
  EXPECT_THROW(CoeffA(0, -2, 1, 20), DomainError);
}

TEST(CoeffTest, FastPathsMatchGeneralClosedForm) {
  for (Kind kind : {Kind::kJ, Kind::kI}) {
    for (int N = 0; N <= 1; ++N) {
      for (int L = N; L <= 40; L += 2) {
        for (const Rat& k : {MakeRat(1, 2), MakeRat(1, 1), MakeRat(7, 3)}) {
          EXPECT_TRUE(AgreeRelative(Coeff(kind, L, N, k, 45),
                                    CoeffGeneral(kind, L, N, k, 45), 43))
              << KindName(kind) << " L=" << L << " N=" << N;
        }
      }
    }
  }
}

TEST(CoeffTest, HigherOrdersMatchOracle) {
  for (int N = 2; N <= 6; ++N) {
    for (int L = N % 2; L <= 14; L += 2) {
      const BigReal oracle = CoeffOracle(Kind::kJ, L, N, 2, L / 2 + 60, 50);
      EXPECT_TRUE(AgreeRelative(CoeffA(L, N, 2, 40), oracle, 38))
          << "L=" << L << " N=" << N;
    }
  }
}

TEST(CoeffTest, BelowOrderEntriesVanishForJ) {
  // For L < N the integral of J_N against P_L vanishes at this parity.
  EXPECT_TRUE(AbsDiff(CoeffA(0, 2, 1, 40),
                      CoeffOracle(Kind::kJ, 0, 2, 1, 80, 40)) < Tol(38));
}

TEST(ClosedFormTest, ModifiedKindIsPhaseShiftedSubstitution) {
  for (int N = 0; N <= 3; ++N) {
    for (int L = N % 2; L <= 10; L += 2) {
      const Rat k = MakeRat(3, 2);
      const ClosedForm j = CoeffClosedForm(Kind::kJ, L, N, k);
      const ClosedForm i = CoeffClosedForm(Kind::kI, L, N, k);
      EXPECT_EQ(i.rational, j.rational);
      EXPECT_EQ(i.params.upper, j.params.upper);
      EXPECT_EQ(i.params.lower, j.params.lower);
      EXPECT_EQ(std::get<Rat>(i.params.argument),
                -std::get<Rat>(j.params.argument));
      EXPECT_EQ(i.phase, j.phase + (L - N));
    }
  }
}

TEST(ClosedFormTest, ArgumentIsMinusQuarterKSquared) {
  const ClosedForm form = CoeffClosedForm(Kind::kJ, 4, 0, 3);
  EXPECT_EQ(std::get<Rat>(form.params.argument), MakeRat(-9, 4));
  EXPECT_EQ(CoeffClosedForm(Kind::kJ, 3, 0, 1).rational, 0);
}

TEST(BuildSeriesTest, LMaxSelectsParityEntries) {
  const FLSeries s = BuildSeries(Kind::kJ, 1, 1, LMax{43}, 34);
  ASSERT_EQ(s.entries.size(), 22u);
  EXPECT_EQ(s.entries.front().L, 1);
  EXPECT_EQ(s.entries.back().L, 43);
  EXPECT_EQ(s.digits, 34);
}

TEST(BuildSeriesTest, ThresholdStopsAtTail) {
  const FLSeries s = BuildSeries(Kind::kJ, 0, 1,
                                 TailThreshold{BigReal::Parse("1e-9", 10)}, 34);
  ASSERT_EQ(s.entries.size(), 5u);
  EXPECT_EQ(s.entries.back().L, 8);
}

TEST(BuildSeriesTest, DefaultThresholdReachesFullPrecision) {
  const FLSeries s =
      BuildSeries(Kind::kJ, 0, 1, TailThreshold{DefaultTailThreshold(34)}, 34);
  EXPECT_EQ(s.entries.back().L, 26);
  // On [-1, 1] the dropped tail is below the threshold.
  const FLSeries full = BuildSeries(Kind::kJ, 0, 1, LMax{60}, 34);
  EXPECT_TRUE(AbsDiff(EvalSeries(s, 1, 40), EvalSeries(full, 1, 40)) <
              DefaultTailThreshold(34));
}

TEST(BuildSeriesTest, CapOnRequestedEntries) {
  EXPECT_THROW(BuildSeries(Kind::kJ, 0, 1, LMax{2 * kMaxSeriesEntries}, 10),
               TruncationCapExceeded);
}

TEST(BuildSeriesTest, TruncationHelpers) {
  const FLSeries s = BuildSeries(Kind::kJ, 0, 1, LMax{42}, 30);
  EXPECT_EQ(Truncated(s, 13).entries.back().L, 24);
  EXPECT_EQ(TruncatedAt(s, 25).entries.size(), 13u);
  EXPECT_EQ(Truncated(s, 100).entries.size(), 22u);
}

TEST(EvalSeriesTest, SpotValues) {
  const FLSeries j0 = BuildSeries(Kind::kJ, 0, 1, LMax{42}, 50);
  EXPECT_TRUE(AbsDiff(EvalSeries(j0, 3, 40),
                      BigReal::Parse("-0.260051954901933437624154695977331", 40)) <
              Tol(33));
  const FLSeries j1 = BuildSeries(Kind::kJ, 1, 1, LMax{43}, 50);
  EXPECT_TRUE(AbsDiff(EvalSeries(j1, 3, 40),
                      BigReal::Parse("0.33905895852593645892551459720648", 40)) <
              Tol(32));
  EXPECT_TRUE(EvalSeries(j1, 0, 40).is_zero());
}

TEST(EvalSeriesTest, ScaleConsistency) {
  // J_0(kx) built at k = 2 equals the k = 1 series at 2x.
  const FLSeries k1 = BuildSeries(Kind::kJ, 0, 1, LMax{60}, 40);
  const FLSeries k2 = BuildSeries(Kind::kJ, 0, 2, LMax{60}, 40);
  for (const Rat& x : {MakeRat(-1, 1), MakeRat(1, 3), MakeRat(3, 4)}) {
    EXPECT_TRUE(AbsDiff(EvalSeries(k2, x, 40), EvalSeries(k1, 2 * x, 40)) <
                Tol(36));
  }
}

TEST(MaclaurinTest, CoefficientsAndValues) {
  EXPECT_EQ(MaclaurinCoefficient(Kind::kJ, 0, 4, 1), MakeRat(1, 64));
  EXPECT_EQ(MaclaurinCoefficient(Kind::kJ, 0, 2, 1), MakeRat(-1, 4));
  EXPECT_EQ(MaclaurinCoefficient(Kind::kI, 0, 2, 1), MakeRat(1, 4));
  EXPECT_EQ(MaclaurinCoefficient(Kind::kJ, 1, 5, 1), MakeRat(1, 384));
  EXPECT_EQ(MaclaurinCoefficient(Kind::kJ, 1, 4, 1), 0);
  EXPECT_EQ(MaclaurinCoefficient(Kind::kJ, 0, 2, 3), MakeRat(-9, 4));
  const BigReal j0_8 = MaclaurinValue(Kind::kJ, 0, BigReal(8L, 40), 30);
  EXPECT_EQ(j0_8.Rounded(15).ToString(), "0.171650807137554");
}

TEST(AllenTest, PublishedDisplays) {
  EXPECT_EQ(EvalAllen(AllenForm::kJ0, BigReal(3L, 30)).ToString(6), "-0.260052");
  EXPECT_EQ(EvalAllen(AllenForm::kJ1, BigReal(3L, 30)).ToString(6), "0.339059");
  EXPECT_EQ(EvalAllen(AllenForm::kI0, BigReal::Parse("3.75", 30)).ToString(6),
            "9.11895");
  EXPECT_EQ(EvalAllen(AllenForm::kI1, BigReal::Parse("3.75", 30)).ToString(6),
            "7.78002");
  EXPECT_EQ(AllenRange(AllenForm::kI1), MakeRat(15, 4));
  EXPECT_EQ(ParseAllenForm("J1"), AllenForm::kJ1);
  EXPECT_THROW(ParseAllenForm("k0"), ParseError);
}

TEST(AccuracyScanTest, FullSeriesOnNarrowRange) {
  const FLSeries s = BuildSeries(Kind::kJ, 0, 1, LMax{42}, 50);
  const AccuracyReport r = AccuracyScan(s, -3, 3, 121, Reference::kMaclaurin);
  EXPECT_EQ(r.grid_points, 121);
  EXPECT_TRUE(r.max_abs_error < Tol(34));
}

TEST(AccuracyScanTest, AllenReferenceAndGridValidation) {
  const FLSeries s = BuildSeries(Kind::kJ, 0, 1, LMax{12}, 30);
  const AccuracyReport r = AccuracyScan(s, -3, 3, 13, Reference::kAllen);
  EXPECT_TRUE(r.max_abs_error < Tol(4));
  EXPECT_THROW(AccuracyScan(s, -3, 3, 1, Reference::kMaclaurin), DomainError);
}

}  // namespace
}  // namespace flbessel
