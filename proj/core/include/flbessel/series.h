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

// Fourier-Legendre expansions J_N(kx) = sum_L a_L P_L(x) and the same for
// I_N(kx), with coefficients from the closed form
//
//   a_L = sqrt(pi) 2^(-2L-2) (2L+1) k^L sigma 2 L!
//         * 2F3~(L/2+1/2, L/2+1; L+3/2, (L-N)/2+1, (L+N)/2+1; -k^2/4)
//
// (2F3~ is the regularized series, sigma = (-1)^((L-N)/2); zero when L+N is
// odd). For I_N the argument is +k^2/4 and sigma = 1.

#ifndef FLBESSEL_SERIES_H_
#define FLBESSEL_SERIES_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "flbessel/hypergeom.h"
#include "flbessel/mpnum.h"

namespace flbessel {

// build_series needed more than kMaxSeriesEntries coefficients.
class TruncationCapExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMaxSeriesEntries = 400;

enum class Kind { kJ, kI };

std::string KindName(Kind kind);  // "J" or "I"
Kind ParseKind(std::string_view text);

struct FLEntry {
  int L = 0;
  BigReal a;
};

// Coefficients are stored with guard digits; `digits` is the precision they
// are guaranteed to.
struct FLSeries {
  Kind kind = Kind::kJ;
  int order = 0;
  Rat k = 1;
  std::vector<FLEntry> entries;
  int digits = kDefaultDigits;
};

// The closed form before evaluation: a_L = rational * sqrt(pi) * i^phase *
// 2F3~(params). phase is kept as an exponent of i so the I/J substitution
// can be checked symbolically; for valid (L, N) it is always even.
struct ClosedForm {
  Rat rational;
  int phase = 0;
  HypParams params;
};
ClosedForm CoeffClosedForm(Kind kind, int L, int N, const Rat& k);

BigReal CoeffA(int L, int N, const Rat& k, int digits);
BigReal CoeffAModified(int L, int N, const Rat& k, int digits);
BigReal Coeff(Kind kind, int L, int N, const Rat& k, int digits);

// The general closed form with the regularized 2F3, no 1F2 shortcut.
BigReal CoeffGeneral(Kind kind, int L, int N, const Rat& k, int digits);

// Build targets: every L up to lmax, or stop after two consecutive
// coefficients (with L >= N) fall below the threshold.
struct LMax {
  int value = 0;
};
struct TailThreshold {
  BigReal value;
};
using BuildTarget = std::variant<LMax, TailThreshold>;

// 10^-(digits + 2).
BigReal DefaultTailThreshold(int digits);

FLSeries BuildSeries(Kind kind, int N, const Rat& k, const BuildTarget& target,
                     int digits);

// Same series keeping only the first `count` entries.
FLSeries Truncated(const FLSeries& s, size_t count);
// Same series keeping entries with L <= lmax.
FLSeries TruncatedAt(const FLSeries& s, int lmax);

BigReal EvalSeries(const FLSeries& s, const Rat& x, int digits);

// Orthogonality integral of the Maclaurin series, summed exactly over
// `maclaurin_terms` terms.
BigReal CoeffOracle(Kind kind, int L, int N, const Rat& k, int maclaurin_terms,
                    int digits);
Rat CoeffOracleExact(Kind kind, int L, int N, const Rat& k,
                     int maclaurin_terms);

// Coefficient of x^m in the Maclaurin series of J_N(kx) or I_N(kx).
Rat MaclaurinCoefficient(Kind kind, int N, int m, const Rat& k = 1);

// J_N(x) or I_N(x) from the Maclaurin series summed to convergence.
BigReal MaclaurinValue(Kind kind, int N, const BigReal& x, int digits);

enum class AllenForm { kJ0, kJ1, kI0, kI1 };
AllenForm ParseAllenForm(std::string_view text);  // "j0", "J0", ...
std::string AllenFormName(AllenForm form);

// Published seven-coefficient polynomial approximations, valid for
// |x| <= 3 (J) and |x| <= 3.75 (I).
BigReal EvalAllen(AllenForm form, const BigReal& x);
Rat AllenRange(AllenForm form);

struct AccuracyReport {
  Rat x_lo;
  Rat x_hi;
  int grid_points = 0;
  BigReal max_abs_error;
  Rat argmax_x;
};

enum class Reference { kMaclaurin, kAllen };

// Maximum |series(x) - reference(kx)| over a uniform grid on [x_lo, x_hi].
AccuracyReport AccuracyScan(const FLSeries& s, const Rat& x_lo,
                            const Rat& x_hi, int grid, Reference reference);

// The Allen form against the Maclaurin reference on the same grid.
AccuracyReport AllenAccuracyScan(AllenForm form, const Rat& x_lo,
                                 const Rat& x_hi, int grid, int digits);

}  // namespace flbessel

#endif  // FLBESSEL_SERIES_H_
