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

#include <algorithm>
#include <string>

namespace flbessel {
namespace {

void CheckShape(const HypParams& p) {
  const size_t nu = p.upper.size();
  const size_t nl = p.lower.size();
  if (!((nu == 1 && nl == 2) || (nu == 2 && nl == 3))) {
    throw ShapeUnsupported("unsupported hypergeometric shape " +
                           std::to_string(nu) + "F" + std::to_string(nl));
  }
}

bool IsNonPositiveInteger(const Rat& b) { return b.get_den() == 1 && b <= 0; }

Rat TermRatio(const HypParams& p, long n) {
  Rat r = 1;
  for (const Rat& a : p.upper) r *= a + n;
  for (const Rat& b : p.lower) r /= b + n;
  return r / (n + 1);
}

Rat Threshold(int digits) {
  BigInt ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10,
                static_cast<unsigned long>(digits + kGuardDigits));
  return Rat(1, ten);
}

[[noreturn]] void ThrowCap(long cap) {
  throw SeriesCapExceeded("hypergeometric series did not converge in " +
                          std::to_string(cap) + " terms");
}

// Sums terms n = start, start+1, ... where `first` is the term at `start`
// and consecutive terms follow TermRatio. The result keeps guard digits.
BigReal SumFrom(const HypParams& p, long start, const Rat& first,
                int digits) {
  const int work = digits + kGuardDigits;
  const Rat tiny = Threshold(digits);
  const long cap = HypTermCap(digits);
  int small_run = 0;
  if (const Rat* z = std::get_if<Rat>(&p.argument)) {
    Rat term = first;
    for (long i = 0; i < start; ++i) term *= *z;
    Rat sum = term;
    for (long n = start;; ++n) {
      if (n - start + 1 >= cap) ThrowCap(cap);
      term *= TermRatio(p, n) * *z;
      sum += term;
      const Rat scale = abs(sum) > 1 ? Rat(abs(sum)) : Rat(1);
      small_run = abs(term) < tiny * scale ? small_run + 1 : 0;
      if (small_run == 2) return BigReal(sum, work);
    }
  }
  const BigReal z = std::get<BigReal>(p.argument).Rounded(work);
  const BigReal small(tiny, work);
  const BigReal one(1L, work);
  BigReal term = BigReal(first, work) * Pow(z, start);
  BigReal sum = term;
  for (long n = start;; ++n) {
    if (n - start + 1 >= cap) ThrowCap(cap);
    term *= TermRatio(p, n);
    term *= z;
    sum += term;
    const BigReal mag = sum.Abs();
    small_run = term.Abs() < small * (mag > one ? mag : one) ? small_run + 1 : 0;
    if (small_run == 2) return sum;
  }
}

}  // namespace

long HypTermCap(int digits) { return 10L * digits + 200; }

BigReal HypPfq(const HypParams& params, int digits) {
  CheckShape(params);
  for (const Rat& b : params.lower) {
    if (IsNonPositiveInteger(b)) {
      throw LowerParamPole("lower parameter " + RatToString(b) +
                           " is a nonpositive integer");
    }
  }
  return SumFrom(params, 0, Rat(1), digits).Rounded(digits);
}

BigReal HypPfqRegularized(const HypParams& params, int digits) {
  CheckShape(params);
  long start = 0;
  for (const Rat& b : params.lower) {
    if (b.get_den() != 1 && b.get_den() != 2) {
      throw ShapeUnsupported("regularized lower parameter " + RatToString(b) +
                             " is not an integer or half-integer");
    }
    if (IsNonPositiveInteger(b)) {
      start = std::max(start, 1 - b.get_num().get_si());
    }
  }
  // Terms below `start` vanish. The first surviving one, without z^start:
  //   prod (a)_start / (start! prod Gamma(b + start)).
  Rat first = 1;
  for (const Rat& a : params.upper) first *= Pochhammer(a, start);
  first /= Rat(Factorial(start));
  int sqrt_pi_count = 0;
  for (const Rat& b : params.lower) {
    // Negative half-integers: Gamma(c) = Gamma(c + m) / (c)_m.
    const Rat c = b + start;
    const long shift = c < 0 ? (1 - Rat(c * 2).get_num().get_si()) / 2 : 0;
    const Rat twice = (c + shift) * 2;
    const HalfIntGamma g = GammaHalfIntExact(twice.get_num().get_si());
    first *= Pochhammer(c, shift) / g.rational;
    if (g.times_sqrt_pi) ++sqrt_pi_count;
  }
  const int work = digits + kGuardDigits;
  // Summing the normalized series keeps the termination test relative to
  // the result even when the gamma factors make it tiny.
  BigReal value = SumFrom(params, start, Rat(1), digits);
  value *= first;
  if (sqrt_pi_count > 0) value /= Pow(SqrtPi(work), sqrt_pi_count);
  return value.Rounded(digits);
}

std::vector<Rat> HypTermsExact(const HypParams& params, long count) {
  CheckShape(params);
  const Rat* z = std::get_if<Rat>(&params.argument);
  if (z == nullptr) throw DomainError("exact terms need a rational argument");
  for (const Rat& b : params.lower) {
    if (IsNonPositiveInteger(b)) {
      throw LowerParamPole("lower parameter " + RatToString(b) +
                           " is a nonpositive integer");
    }
  }
  std::vector<Rat> terms;
  if (count <= 0) return terms;
  terms.push_back(1);
  for (long n = 0; n + 1 < count; ++n) {
    terms.push_back(terms.back() * TermRatio(params, n) * *z);
  }
  return terms;
}

}  // namespace flbessel
