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

// Folding a Fourier-Legendre series into monomials, and checking that the
// reciprocals of the resulting coefficients are products of small primes.

#ifndef FLBESSEL_POWERPRIME_H_
#define FLBESSEL_POWERPRIME_H_

#include <vector>

#include "flbessel/mpnum.h"
#include "flbessel/series.h"

namespace flbessel {

struct PowerTerm {
  int power = 0;
  BigReal c;
};

struct PowerSeries {
  Kind kind = Kind::kJ;
  int order = 0;
  Rat k = 1;
  std::vector<PowerTerm> coeffs;  // ascending powers of the order's parity
  int provenance = 0;             // Fourier-Legendre entries folded in
  int digits = kDefaultDigits;
};

struct ExactTerm {
  int power = 0;
  Rat c;
};

// c_m = sum over entries of a_L * [x^m] P_L(x), for m <= max_power.
PowerSeries ToPowerSeries(const FLSeries& s, int max_power);

// Exact Maclaurin coefficients of J_N(kx) or I_N(kx) up to max_power.
std::vector<ExactTerm> MaclaurinExact(Kind kind, int N, int max_power,
                                      const Rat& k = 1);

// Power series built from exact Maclaurin coefficients rendered at `digits`.
PowerSeries PowerSeriesFromExact(Kind kind, int N, const Rat& k,
                                 const std::vector<ExactTerm>& exact,
                                 int digits);

struct FactorEntry {
  int power = 0;
  bool certified = false;
  PrimePowers powers;  // meaningful only when certified
  BigReal reciprocal;
  BigReal gap;
};

struct FactorReport {
  std::vector<FactorEntry> entries;

  bool all_certified() const;
  const FactorEntry* find(int power) const;
};

// 1e-6.
BigReal DefaultRoundingTolerance();

// Factors 1/|c_m / k^m| for every coefficient; failures are recorded per
// entry rather than thrown.
FactorReport CertifyPrimeStructure(
    const PowerSeries& p, const BigReal& tol = DefaultRoundingTolerance(),
    int prime_bound = kDefaultPrimeBound);

struct PowerError {
  int power = 0;
  BigReal abs_error;
};

// |c_m - exact_m| for each power present in both.
std::vector<PowerError> ComparePowerSeries(const PowerSeries& p,
                                           const std::vector<ExactTerm>& exact);

}  // namespace flbessel

#endif  // FLBESSEL_POWERPRIME_H_
