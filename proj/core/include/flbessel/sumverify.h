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

// Summed-series identities. Collecting the x^(2h) coefficient of the
// J_0(kx) Fourier-Legendre series over all even L gives
//
//   sum_L sqrt(pi) (-1)^(L/2) 2^(-3L-2) 2 (2L+1) C(L, L/2) C(2L, L) k^L
//         1F2(L/2+1/2; L/2+1, L+3/2; -k^2/4) / (Gamma(L+3/2) (L/2-h)!) B_L
//     = (-1)^h 2^(-2h) k^(2h) / (h!)^2
//
// where B_L is a ratio of Pochhammer symbols that can be written three
// equivalent ways. The J_1 family sums odd L for the x^(2h+1) coefficient.

#ifndef FLBESSEL_SUMVERIFY_H_
#define FLBESSEL_SUMVERIFY_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "flbessel/mpnum.h"

namespace flbessel {

// The three bracket forms disagreed for some term.
class VariantMismatch : public Error {
 public:
  using Error::Error;
};

enum class Family { kJ0, kJ1 };
enum class Variant { kPochhammer, kReflected, kGammaForm };

std::string FamilyName(Family family);  // "j0", "j1"
Family ParseFamily(std::string_view text);
std::string VariantName(Variant variant);
Variant ParseVariant(std::string_view text);

struct SumSpec {
  Family family = Family::kJ0;
  Variant variant = Variant::kPochhammer;
  int h = 0;
  Rat k = 1;
  int l_terms = 80;  // number of L values of the family's parity summed
  int digits = kDefaultDigits;
};

// h + 80.
int DefaultLTerms(int h);

// The bracket B_L for the given variant; exact.
Rat SummandBracket(Family family, Variant variant, int h, int L);

// Evaluates the summed series, caching the 1F2 factor per L so sweeps over
// h reuse it. Not thread-safe; use one instance per thread.
class SummedSeries {
 public:
  SummedSeries(Family family, const Rat& k, int digits);

  // The L-th summand (L of the family's parity).
  BigReal Term(Variant variant, int h, int L);
  // S_0, S_1, ..., S_{l_terms-1}.
  std::vector<BigReal> Partials(Variant variant, int h, int l_terms);
  BigReal Sum(Variant variant, int h, int l_terms);

 private:
  const BigReal& Hyp(int L);

  Family family_;
  Rat k_;
  int digits_;
  std::map<int, BigReal> hyp_cache_;
};

BigReal SummedSeriesLhs(const SumSpec& spec);
std::vector<BigReal> SummedSeriesPartials(const SumSpec& spec);

Rat SummedSeriesRhsExact(Family family, int h, const Rat& k);
BigReal SummedSeriesRhs(const SumSpec& spec);

struct IdentityReport {
  SumSpec spec;
  BigReal lhs;
  BigReal rhs;
  BigReal rel_diff;
  BigReal rel_tol;
  bool pass = false;
};

IdentityReport VerifyIdentity(const SumSpec& spec, const BigReal& rel_tol);
// Same, reusing an evaluator with matching family, k and digits.
IdentityReport VerifyIdentity(SummedSeries& series, const SumSpec& spec,
                              const BigReal& rel_tol);

// |S_m - S_n| < epsilon. Requires m > n >= 0 and m < partials.size();
// throws std::out_of_range otherwise.
bool CauchyCheck(const std::vector<BigReal>& partials, size_t m, size_t n,
                 const BigReal& epsilon);

}  // namespace flbessel

#endif  // FLBESSEL_SUMVERIFY_H_
