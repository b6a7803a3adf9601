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

#include <cassert>
#include <stdexcept>
#include <utility>

#include "flbessel/hypergeom.h"

namespace flbessel {
namespace {

Rat TwoPow(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(e)));
  return e >= 0 ? Rat(p) : Rat(1, p);
}

Rat PowRat(const Rat& base, long n) {
  Rat r = 1;
  for (long i = 0; i < n; ++i) r *= base;
  return r;
}

int SignPow(long e) { return e % 2 == 0 ? 1 : -1; }

// n = L/2 - h (J0) or (L-1)/2 - h (J1); negative means the term vanishes.
long BracketLength(Family family, int h, int L) {
  return family == Family::kJ0 ? L / 2 - h : (L - 1) / 2 - h;
}

void CheckParity(Family family, int L) {
  const int want = family == Family::kJ0 ? 0 : 1;
  if (L < 0 || L % 2 != want) {
    throw DomainError("L = " + std::to_string(L) +
                      " has the wrong parity for this family");
  }
}

// Gamma(a) / Gamma(b) for half-integer or integer arguments given twice.
Rat GammaRatio(long twice_a, long twice_b) {
  const HalfIntGamma a = GammaHalfIntExact(twice_a);
  const HalfIntGamma b = GammaHalfIntExact(twice_b);
  assert(a.times_sqrt_pi == b.times_sqrt_pi);
  return a.rational / b.rational;
}

}  // namespace

std::string FamilyName(Family family) {
  return family == Family::kJ0 ? "j0" : "j1";
}

Family ParseFamily(std::string_view text) {
  if (text == "j0" || text == "J0") return Family::kJ0;
  if (text == "j1" || text == "J1") return Family::kJ1;
  throw ParseError("unknown family '" + std::string(text) + "'");
}

std::string VariantName(Variant variant) {
  switch (variant) {
    case Variant::kPochhammer:
      return "pochhammer";
    case Variant::kReflected:
      return "reflected";
    case Variant::kGammaForm:
      return "gammaform";
  }
  return "pochhammer";
}

Variant ParseVariant(std::string_view text) {
  if (text == "pochhammer") return Variant::kPochhammer;
  if (text == "reflected") return Variant::kReflected;
  if (text == "gammaform") return Variant::kGammaForm;
  throw ParseError("unknown variant '" + std::string(text) + "'");
}

int DefaultLTerms(int h) { return h + 80; }

Rat SummandBracket(Family family, Variant variant, int h, int L) {
  CheckParity(family, L);
  if (h < 0) throw DomainError("h must be nonnegative");
  const long n = BracketLength(family, h, L);
  if (n < 0) return 0;
  const Rat half_l = MakeRat(L, 2);
  switch (variant) {
    case Variant::kPochhammer:
      return Pochhammer(Rat(1, 2) - half_l, n) * Pochhammer(-half_l, n) /
             Pochhammer(Rat(1, 2) - L, n);
    case Variant::kReflected:
      if (family == Family::kJ0) {
        return SignPow(n) * Pochhammer(Rat(2 * h + 1, 2), n) *
               Pochhammer(Rat(h + 1), n) /
               Pochhammer(half_l + h + Rat(1, 2), n);
      }
      return SignPow(n) * Pochhammer(Rat(h + 1), n) *
             Pochhammer(Rat(2 * h + 3, 2), n) / Pochhammer(half_l + h + 1, n);
    case Variant::kGammaForm:
      if (family == Family::kJ0) {
        return SignPow(n) * TwoPow(2L * h - L) * Rat(Factorial(L)) /
               Rat(Factorial(2L * h)) * GammaRatio(2L * h + L + 1, 2L * L + 1);
      }
      return SignPow(n) * TwoPow(2L * h - L + 1) * Rat(Factorial(L)) /
             Rat(Factorial(2L * h + 1)) *
             GammaRatio(2L * h + L + 2, 2L * L + 1);
  }
  return 0;
}

SummedSeries::SummedSeries(Family family, const Rat& k, int digits)
    : family_(family), k_(k), digits_(digits) {}

const BigReal& SummedSeries::Hyp(int L) {
  auto it = hyp_cache_.find(L);
  if (it != hyp_cache_.end()) return it->second;
  const Rat half_l = MakeRat(L, 2);
  HypParams p;
  p.argument = Rat(-k_ * k_ / 4);
  if (family_ == Family::kJ0) {
    p.upper = {half_l + Rat(1, 2)};
    p.lower = {half_l + 1, Rat(2 * L + 3, 2)};
  } else {
    p.upper = {half_l + 1};
    p.lower = {half_l + Rat(3, 2), Rat(2 * L + 3, 2)};
  }
  return hyp_cache_.emplace(L, HypPfq(p, digits_ + kGuardDigits)).first->second;
}

BigReal SummedSeries::Term(Variant variant, int h, int L) {
  CheckParity(family_, L);
  const int work = digits_ + kGuardDigits;
  const long n = BracketLength(family_, h, L);
  if (n < 0) return BigReal(work);
  const Rat bracket = SummandBracket(family_, variant, h, L);
  for (Variant other :
       {Variant::kPochhammer, Variant::kReflected, Variant::kGammaForm}) {
    if (other != variant && SummandBracket(family_, other, h, L) != bracket) {
      throw VariantMismatch("bracket forms " + VariantName(variant) + " and " +
                            VariantName(other) + " disagree at h = " +
                            std::to_string(h) + ", L = " + std::to_string(L));
    }
  }
  // sqrt(pi) / Gamma(L + 3/2) is rational.
  const HalfIntGamma g = GammaHalfIntExact(2L * L + 3);
  const long sign_exp = family_ == Family::kJ0 ? L / 2 : (L - 1) / 2;
  const BigInt c_half =
      family_ == Family::kJ0 ? Binomial(L, L / 2) : Binomial(L, (L - 1) / 2);
  const Rat prefactor = SignPow(sign_exp) * TwoPow(-3L * L - 1) *
                        (2 * L + 1) * Rat(c_half) * Rat(Binomial(2L * L, L)) *
                        PowRat(k_, L) / (g.rational * Rat(Factorial(n))) *
                        bracket;
  return Hyp(L) * prefactor;
}

std::vector<BigReal> SummedSeries::Partials(Variant variant, int h,
                                            int l_terms) {
  if (h < 0) throw DomainError("h must be nonnegative");
  if (l_terms < 1) throw DomainError("need at least one term");
  const int first_l = family_ == Family::kJ0 ? 0 : 1;
  std::vector<BigReal> partials;
  partials.reserve(static_cast<size_t>(l_terms));
  BigReal sum(digits_ + kGuardDigits);
  for (int i = 0; i < l_terms; ++i) {
    sum += Term(variant, h, first_l + 2 * i);
    partials.push_back(sum.Rounded(digits_));
  }
  return partials;
}

BigReal SummedSeries::Sum(Variant variant, int h, int l_terms) {
  if (h < 0) throw DomainError("h must be nonnegative");
  if (l_terms < 1) throw DomainError("need at least one term");
  const int first_l = family_ == Family::kJ0 ? 0 : 1;
  BigReal sum(digits_ + kGuardDigits);
  for (int i = 0; i < l_terms; ++i) sum += Term(variant, h, first_l + 2 * i);
  return sum;
}

BigReal SummedSeriesLhs(const SumSpec& spec) {
  SummedSeries series(spec.family, spec.k, spec.digits);
  return series.Sum(spec.variant, spec.h, spec.l_terms).Rounded(spec.digits);
}

std::vector<BigReal> SummedSeriesPartials(const SumSpec& spec) {
  SummedSeries series(spec.family, spec.k, spec.digits);
  return series.Partials(spec.variant, spec.h, spec.l_terms);
}

Rat SummedSeriesRhsExact(Family family, int h, const Rat& k) {
  if (h < 0) throw DomainError("h must be nonnegative");
  if (family == Family::kJ0) {
    return SignPow(h) * TwoPow(-2L * h) * PowRat(k, 2L * h) /
           Rat(Factorial(h) * Factorial(h));
  }
  return SignPow(h) * TwoPow(-2L * h - 1) * PowRat(k, 2L * h + 1) /
         Rat(Factorial(h) * Factorial(h + 1));
}

BigReal SummedSeriesRhs(const SumSpec& spec) {
  return BigReal(SummedSeriesRhsExact(spec.family, spec.h, spec.k),
                 spec.digits);
}

IdentityReport VerifyIdentity(SummedSeries& series, const SumSpec& spec,
                              const BigReal& rel_tol) {
  const int work = spec.digits + kGuardDigits;
  IdentityReport report;
  report.spec = spec;
  const BigReal lhs = series.Sum(spec.variant, spec.h, spec.l_terms);
  const BigReal rhs(SummedSeriesRhsExact(spec.family, spec.h, spec.k), work);
  report.lhs = lhs.Rounded(spec.digits);
  report.rhs = rhs.Rounded(spec.digits);
  report.rel_tol = rel_tol;
  if (rhs.is_zero()) {
    report.rel_diff = lhs.Abs().Rounded(spec.digits);
  } else {
    report.rel_diff = ((lhs - rhs) / rhs).Abs().Rounded(spec.digits);
  }
  report.pass = report.rel_diff <= rel_tol;
  return report;
}

IdentityReport VerifyIdentity(const SumSpec& spec, const BigReal& rel_tol) {
  SummedSeries series(spec.family, spec.k, spec.digits);
  return VerifyIdentity(series, spec, rel_tol);
}

bool CauchyCheck(const std::vector<BigReal>& partials, size_t m, size_t n,
                 const BigReal& epsilon) {
  if (m <= n) throw std::out_of_range("Cauchy check needs m > n");
  if (m >= partials.size()) {
    throw std::out_of_range("partial sum index " + std::to_string(m) +
                            " out of range");
  }
  return (partials[m] - partials[n]).Abs() < epsilon;
}

}  // namespace flbessel
