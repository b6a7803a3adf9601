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

// Generalized hypergeometric series 1F2 and 2F3 with rational parameters.
//
// The series is summed by the term recurrence
//   t[n+1] = t[n] * prod(a_i + n) / prod(b_j + n) * z / (n + 1)
// and stops once two consecutive terms are both below
// 10^-(digits + kGuardDigits) * max(|partial sum|, 1). With a rational
// argument every term and the partial sum are exact; the only rounding is
// the final conversion.

#ifndef FLBESSEL_HYPERGEOM_H_
#define FLBESSEL_HYPERGEOM_H_

#include <variant>
#include <vector>

#include "flbessel/mpnum.h"

namespace flbessel {

// A lower parameter is a nonpositive integer in the plain series.
class LowerParamPole : public Error {
 public:
  using Error::Error;
};

// Parameter counts other than (1, 2) or (2, 3), or a regularized lower
// parameter outside the integers and half-integers.
class ShapeUnsupported : public Error {
 public:
  using Error::Error;
};

// More than 10 * digits + 200 terms were needed.
class SeriesCapExceeded : public Error {
 public:
  using Error::Error;
};

struct HypParams {
  std::vector<Rat> upper;
  std::vector<Rat> lower;
  std::variant<Rat, BigReal> argument;
};

// Maximum number of terms summed at a given precision.
long HypTermCap(int digits);

// pFq(upper; lower; z) correct to `digits` digits.
BigReal HypPfq(const HypParams& params, int digits);

// sum_n prod (a_i)_n / prod Gamma(b_j + n) * z^n / n!, with 1/Gamma zero at
// the poles so leading terms drop out when some b_j is a nonpositive
// integer. Lower parameters must be integers or half-integers.
BigReal HypPfqRegularized(const HypParams& params, int digits);

// First `count` terms of the plain series generated by the recurrence;
// requires a rational argument.
std::vector<Rat> HypTermsExact(const HypParams& params, long count);

}  // namespace flbessel

#endif  // FLBESSEL_HYPERGEOM_H_
