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

#include <algorithm>
#include <utility>

namespace flbessel {
namespace {

void CheckDegree(long L) {
  if (L < 0) throw DomainError("Legendre degree must be nonnegative");
}

}  // namespace

BigReal EvalP(int L, const BigReal& x, int digits) {
  CheckDegree(L);
  const int work = digits + kGuardDigits;
  const BigReal xw = x.Rounded(std::max(work, x.digits()));
  BigReal prev(1L, work);
  if (L == 0) return prev.Rounded(digits);
  BigReal cur = xw;
  for (int l = 1; l < L; ++l) {
    BigReal next = cur * xw;
    next *= Rat(2 * l + 1);
    next -= prev * Rat(l);
    next /= Rat(l + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.Rounded(digits);
}

Rat EvalP(int L, const Rat& x) {
  CheckDegree(L);
  return EvalPAll(L, x).back();
}

std::vector<Rat> EvalPAll(int lmax, const Rat& x) {
  CheckDegree(lmax);
  std::vector<Rat> p;
  p.reserve(static_cast<size_t>(lmax) + 1);
  p.push_back(1);
  if (lmax >= 1) p.push_back(x);
  for (int l = 1; l < lmax; ++l) {
    Rat next = (Rat(2 * l + 1) * x * p[l] - Rat(l) * p[l - 1]) / (l + 1);
    p.push_back(next);
  }
  return p;
}

std::vector<LegendreMonomials> MonomialTable(int lmax) {
  CheckDegree(lmax);
  std::vector<LegendreMonomials> table;
  table.reserve(static_cast<size_t>(lmax) + 1);
  table.push_back({0, {Rat(1)}});
  if (lmax >= 1) table.push_back({1, {Rat(0), Rat(1)}});
  for (int l = 1; l < lmax; ++l) {
    const std::vector<Rat>& cur = table[l].coeffs;
    const std::vector<Rat>& prev = table[l - 1].coeffs;
    std::vector<Rat> next(static_cast<size_t>(l) + 2);
    for (int m = 0; m <= l + 1; ++m) {
      Rat c = 0;
      if (m >= 1) c += Rat(2 * l + 1) * cur[m - 1];
      if (m < static_cast<int>(prev.size())) c -= Rat(l) * prev[m];
      next[m] = c / (l + 1);
    }
    table.push_back({l + 1, std::move(next)});
  }
  return table;
}

LegendreMonomials Monomials(int L) {
  CheckDegree(L);
  return MonomialTable(L).back();
}

Rat LeadingCoefficient(int L) {
  CheckDegree(L);
  BigInt two_l;
  mpz_ui_pow_ui(two_l.get_mpz_t(), 2, static_cast<unsigned long>(L));
  const BigInt f = Factorial(L);
  return MakeRat(Factorial(2L * L), two_l * f * f);
}

Rat EvalPVia2F1(int L, const Rat& x) {
  CheckDegree(L);
  if (x == 0) throw ZeroArgument("2F1 form of P_L is undefined at x = 0");
  const Rat a = Rat(1, 2) - MakeRat(L, 2);
  const Rat b = MakeRat(-L, 2);
  const Rat c = Rat(1, 2) - L;
  const Rat z = 1 / (x * x);
  Rat term = 1;
  Rat sum = 1;
  for (long j = 0; j < L / 2; ++j) {
    term *= (a + j) * (b + j) / ((c + j) * (j + 1)) * z;
    sum += term;
  }
  BigInt two_l;
  mpz_ui_pow_ui(two_l.get_mpz_t(), 2, static_cast<unsigned long>(L));
  Rat xl = 1;
  for (int i = 0; i < L; ++i) xl *= x;
  return MakeRat(Binomial(2L * L, L), two_l) * xl * sum;
}

Rat MomentIntegral(long m, int L) {
  CheckDegree(L);
  if (m < 0) throw DomainError("moment order must be nonnegative");
  if (m < L || (m - L) % 2 != 0) return 0;
  // 2^(L+1) m! ((m+L)/2)! / (((m-L)/2)! (m+L+1)!)
  BigInt two;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(L) + 1);
  return MakeRat(two * Factorial(m) * Factorial((m + L) / 2),
                 Factorial((m - L) / 2) * Factorial(m + L + 1));
}

}  // namespace flbessel
