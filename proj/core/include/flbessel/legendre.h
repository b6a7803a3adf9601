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

// Legendre polynomials P_L: evaluation by the Bonnet recurrence and exact
// expansion into monomials. Arguments outside [-1, 1] are allowed.

#ifndef FLBESSEL_LEGENDRE_H_
#define FLBESSEL_LEGENDRE_H_

#include <vector>

#include "flbessel/mpnum.h"

namespace flbessel {

// The 2F1 route was asked to evaluate at x = 0.
class ZeroArgument : public Error {
 public:
  using Error::Error;
};

// coeffs[m] is the coefficient of x^m in P_degree; size degree + 1.
struct LegendreMonomials {
  int degree = 0;
  std::vector<Rat> coeffs;
};

BigReal EvalP(int L, const BigReal& x, int digits);
Rat EvalP(int L, const Rat& x);

// P_0(x) ... P_lmax(x) exactly.
std::vector<Rat> EvalPAll(int lmax, const Rat& x);

LegendreMonomials Monomials(int L);
// Monomials(0) ... Monomials(lmax), sharing one recurrence pass.
std::vector<LegendreMonomials> MonomialTable(int lmax);

// (2L)! / (2^L (L!)^2).
Rat LeadingCoefficient(int L);

// P_L(x) = 2^-L C(2L, L) x^L 2F1(1/2 - L/2, -L/2; 1/2 - L; 1/x^2), a
// terminating sum. Throws ZeroArgument for x == 0.
Rat EvalPVia2F1(int L, const Rat& x);

// Integral over [-1, 1] of x^m P_L(x); zero unless m >= L and m - L is even.
Rat MomentIntegral(long m, int L);

}  // namespace flbessel

#endif  // FLBESSEL_LEGENDRE_H_
