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

#include <algorithm>
#include <array>
#include <utility>

#include "flbessel/legendre.h"

namespace flbessel {
namespace {

void CheckIndices(int L, int N) {
  if (L < 0 || N < 0) {
    throw DomainError("degree and order must be nonnegative");
  }
}

Rat PowRat(const Rat& base, long n) {
  Rat r = 1;
  for (long i = 0; i < n; ++i) r *= base;
  return r;
}

Rat TwoPow(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(e)));
  return e >= 0 ? Rat(p) : Rat(1, p);
}

// 2^(-2L-2) (2L+1) k^L 2
Rat CommonPrefactor(int L, const Rat& k) {
  return TwoPow(-2L * L - 1) * (2 * L + 1) * PowRat(k, L);
}

Rat HypArgument(Kind kind, const Rat& k) {
  const Rat z = k * k / 4;
  return kind == Kind::kJ ? Rat(-z) : z;
}

int ParitySign(Kind kind, int L, int N) {
  if (kind == Kind::kI) return 1;
  return ((L - N) / 2) % 2 == 0 ? 1 : -1;
}

// The 1F2 reductions for N = 0 and N = 1; the Gamma(L+3/2) in the
// denominator cancels sqrt(pi), leaving a rational prefactor.
BigReal CoeffFastPath(Kind kind, int L, int N, const Rat& k, int digits) {
  const int work = digits + kGuardDigits;
  const Rat half_l = MakeRat(L, 2);
  HypParams p;
  p.argument = HypArgument(kind, k);
  BigInt binom;
  if (N == 0) {
    p.upper = {half_l + Rat(1, 2)};
    p.lower = {half_l + 1, Rat(2 * L + 3, 2)};
    binom = Binomial(L, L / 2);
  } else {
    p.upper = {half_l + 1};
    p.lower = {half_l + Rat(3, 2), Rat(2 * L + 3, 2)};
    binom = Binomial(L, (L - 1) / 2);
  }
  const HalfIntGamma g = GammaHalfIntExact(2L * L + 3);
  const Rat prefactor = CommonPrefactor(L, k) * Rat(binom) / g.rational *
                        ParitySign(kind, L, N);
  BigReal value = HypPfq(p, work);
  value *= prefactor;
  return value.Rounded(digits);
}

}  // namespace

std::string KindName(Kind kind) { return kind == Kind::kJ ? "J" : "I"; }

Kind ParseKind(std::string_view text) {
  if (text == "J" || text == "j") return Kind::kJ;
  if (text == "I" || text == "i") return Kind::kI;
  throw ParseError("unknown Bessel kind '" + std::string(text) + "'");
}

ClosedForm CoeffClosedForm(Kind kind, int L, int N, const Rat& k) {
  CheckIndices(L, N);
  ClosedForm form;
  const bool gate_open = (L + N) % 2 == 0;
  form.rational = gate_open ? Rat(CommonPrefactor(L, k) * Rat(Factorial(L))) : Rat(0);
  form.phase = kind == Kind::kJ ? L - N : 2 * L - 2 * N;
  const Rat half_l = MakeRat(L, 2);
  form.params.upper = {half_l + Rat(1, 2), half_l + 1};
  form.params.lower = {Rat(2 * L + 3, 2), MakeRat(L - N, 2) + 1, MakeRat(L + N, 2) + 1};
  form.params.argument = HypArgument(kind, k);
  return form;
}

BigReal CoeffGeneral(Kind kind, int L, int N, const Rat& k, int digits) {
  const ClosedForm form = CoeffClosedForm(kind, L, N, k);
  if (form.rational == 0) return BigReal(digits);
  const int work = digits + kGuardDigits;
  BigReal value = HypPfqRegularized(form.params, work);
  value *= SqrtPi(work);
  // phase is even whenever the parity gate is open.
  const int quarter = ((form.phase % 4) + 4) % 4;
  value *= quarter == 0 ? form.rational : Rat(-form.rational);
  return value.Rounded(digits);
}

BigReal Coeff(Kind kind, int L, int N, const Rat& k, int digits) {
  CheckIndices(L, N);
  if ((L + N) % 2 != 0) return BigReal(digits);
  if (N <= 1) return CoeffFastPath(kind, L, N, k, digits);
  return CoeffGeneral(kind, L, N, k, digits);
}

BigReal CoeffA(int L, int N, const Rat& k, int digits) {
  return Coeff(Kind::kJ, L, N, k, digits);
}

BigReal CoeffAModified(int L, int N, const Rat& k, int digits) {
  return Coeff(Kind::kI, L, N, k, digits);
}

BigReal DefaultTailThreshold(int digits) {
  return Pow(BigReal(10L, 20), -(digits + 2)).Rounded(20);
}

FLSeries BuildSeries(Kind kind, int N, const Rat& k, const BuildTarget& target,
                     int digits) {
  CheckIndices(0, N);
  FLSeries s;
  s.kind = kind;
  s.order = N;
  s.k = k;
  s.digits = digits;
  const int work = digits + kGuardDigits;
  if (const LMax* lmax = std::get_if<LMax>(&target)) {
    for (int L = N % 2; L <= lmax->value; L += 2) {
      if (static_cast<int>(s.entries.size()) >= kMaxSeriesEntries) {
        throw TruncationCapExceeded("more than " +
                                    std::to_string(kMaxSeriesEntries) +
                                    " Fourier-Legendre entries requested");
      }
      s.entries.push_back({L, Coeff(kind, L, N, k, work)});
    }
    return s;
  }
  const BigReal& threshold = std::get<TailThreshold>(target).value;
  // Entries below the threshold are held back until the next one decides
  // whether the tail has started.
  std::vector<FLEntry> pending;
  int computed = 0;
  for (int L = N % 2;; L += 2) {
    if (computed >= kMaxSeriesEntries) {
      throw TruncationCapExceeded("tail threshold not reached within " +
                                  std::to_string(kMaxSeriesEntries) +
                                  " entries");
    }
    ++computed;
    FLEntry e{L, Coeff(kind, L, N, k, work)};
    const bool small = L >= N && e.a.Abs() < threshold;
    if (!small) {
      for (FLEntry& p : pending) s.entries.push_back(std::move(p));
      pending.clear();
      s.entries.push_back(std::move(e));
      continue;
    }
    pending.push_back(std::move(e));
    if (pending.size() == 2) break;
  }
  return s;
}

FLSeries Truncated(const FLSeries& s, size_t count) {
  FLSeries out = s;
  if (out.entries.size() > count) out.entries.resize(count);
  return out;
}

FLSeries TruncatedAt(const FLSeries& s, int lmax) {
  FLSeries out = s;
  std::erase_if(out.entries, [lmax](const FLEntry& e) { return e.L > lmax; });
  return out;
}

BigReal EvalSeries(const FLSeries& s, const Rat& x, int digits) {
  const int work = std::max(s.digits, digits) + kGuardDigits;
  BigReal sum(work);
  if (s.entries.empty()) return sum.Rounded(digits);
  const std::vector<Rat> p = EvalPAll(s.entries.back().L, x);
  for (const FLEntry& e : s.entries) {
    sum += e.a * p[static_cast<size_t>(e.L)];
  }
  return sum.Rounded(digits);
}

Rat CoeffOracleExact(Kind kind, int L, int N, const Rat& k,
                     int maclaurin_terms) {
  CheckIndices(L, N);
  if ((L + N) % 2 != 0) return 0;
  Rat sum = 0;
  for (int j = 0; j < maclaurin_terms; ++j) {
    const int m = 2 * j + N;
    const Rat moment = MomentIntegral(m, L);
    if (moment == 0) continue;
    sum += MaclaurinCoefficient(kind, N, m, k) * moment;
  }
  return sum * Rat(2 * L + 1, 2);
}

BigReal CoeffOracle(Kind kind, int L, int N, const Rat& k, int maclaurin_terms,
                    int digits) {
  return BigReal(CoeffOracleExact(kind, L, N, k, maclaurin_terms), digits);
}

Rat MaclaurinCoefficient(Kind kind, int N, int m, const Rat& k) {
  CheckIndices(m, N);
  if (m < N || (m - N) % 2 != 0) return 0;
  const int j = (m - N) / 2;
  Rat c = TwoPow(-m) / Rat(Factorial(j) * Factorial(j + N)) * PowRat(k, m);
  return kind == Kind::kJ && j % 2 == 1 ? Rat(-c) : c;
}

BigReal MaclaurinValue(Kind kind, int N, const BigReal& x, int digits) {
  CheckIndices(0, N);
  const int work = digits + kGuardDigits;
  const BigReal xw = x.Rounded(work);
  const BigReal one(1L, work);
  BigReal z = xw * xw / Rat(4);
  if (kind == Kind::kJ) z = -z;
  BigReal term = Pow(xw / Rat(2), N) / Rat(Factorial(N));
  BigReal sum = term;
  const BigReal tiny = Pow(BigReal(10L, work), -work);
  int small_run = 0;
  for (long j = 0; small_run < 2; ++j) {
    if (j > 100000) throw SeriesCapExceeded("Maclaurin series did not converge");
    term *= z;
    term /= Rat((j + 1) * (j + 1 + N));
    sum += term;
    const BigReal mag = sum.Abs();
    small_run = term.Abs() < tiny * (mag > one ? mag : one) ? small_run + 1 : 0;
  }
  return sum.Rounded(digits);
}

namespace {

struct AllenPolynomial {
  Rat scale;            // t = x / scale
  bool times_x;         // the J1 and I1 forms are x * p(t^2)
  std::array<const char*, 7> coeffs;
};

const AllenPolynomial& AllenData(AllenForm form) {
  static const AllenPolynomial kJ0{
      3, false,
      {"1", "-2.2499997", "1.2656208", "-0.3163866", "0.0444479", "-0.0039444",
       "0.0002100"}};
  static const AllenPolynomial kJ1{
      3, true,
      {"0.5", "-0.56249985", "0.21093573", "-0.03954289", "0.00443319",
       "-0.00031761", "0.00001109"}};
  static const AllenPolynomial kI0{
      Rat(15, 4), false,
      {"1", "3.5156229", "3.0899424", "1.2067492", "0.2659732", "0.0360768",
       "0.0045813"}};
  static const AllenPolynomial kI1{
      Rat(15, 4), true,
      {"0.5", "0.87890594", "0.51498869", "0.15084934", "0.02658733",
       "0.00301532", "0.00032411"}};
  switch (form) {
    case AllenForm::kJ0:
      return kJ0;
    case AllenForm::kJ1:
      return kJ1;
    case AllenForm::kI0:
      return kI0;
    case AllenForm::kI1:
      return kI1;
  }
  return kJ0;
}

AllenForm AllenFormFor(Kind kind, int N) {
  if (N == 0) return kind == Kind::kJ ? AllenForm::kJ0 : AllenForm::kI0;
  if (N == 1) return kind == Kind::kJ ? AllenForm::kJ1 : AllenForm::kI1;
  throw DomainError("no polynomial approximation for order " +
                    std::to_string(N));
}

std::vector<Rat> Grid(const Rat& lo, const Rat& hi, int grid) {
  if (grid < 2) throw DomainError("accuracy grid needs at least two points");
  if (hi < lo) throw DomainError("empty scan range");
  std::vector<Rat> xs;
  for (int i = 0; i < grid; ++i) xs.push_back(lo + (hi - lo) * i / (grid - 1));
  return xs;
}

}  // namespace

AllenForm ParseAllenForm(std::string_view text) {
  if (text == "j0" || text == "J0") return AllenForm::kJ0;
  if (text == "j1" || text == "J1") return AllenForm::kJ1;
  if (text == "i0" || text == "I0") return AllenForm::kI0;
  if (text == "i1" || text == "I1") return AllenForm::kI1;
  throw ParseError("unknown approximation '" + std::string(text) + "'");
}

std::string AllenFormName(AllenForm form) {
  switch (form) {
    case AllenForm::kJ0:
      return "j0";
    case AllenForm::kJ1:
      return "j1";
    case AllenForm::kI0:
      return "i0";
    case AllenForm::kI1:
      return "i1";
  }
  return "j0";
}

Rat AllenRange(AllenForm form) { return AllenData(form).scale; }

BigReal EvalAllen(AllenForm form, const BigReal& x) {
  const AllenPolynomial& poly = AllenData(form);
  const int digits = x.digits();
  const BigReal t = x / poly.scale;
  const BigReal t2 = t * t;
  // Horner in t^2.
  BigReal value(digits);
  for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) {
    value *= t2;
    value += ParseRat(*it);
  }
  if (poly.times_x) value *= x;
  return value;
}

AccuracyReport AccuracyScan(const FLSeries& s, const Rat& x_lo,
                            const Rat& x_hi, int grid, Reference reference) {
  const int work = s.digits + 10;
  AccuracyReport report;
  report.x_lo = x_lo;
  report.x_hi = x_hi;
  report.grid_points = grid;
  report.max_abs_error = BigReal(work);
  report.argmax_x = x_lo;
  for (const Rat& x : Grid(x_lo, x_hi, grid)) {
    const BigReal series = EvalSeries(s, x, work);
    const BigReal kx(s.k * x, work);
    const BigReal ref =
        reference == Reference::kMaclaurin
            ? MaclaurinValue(s.kind, s.order, kx, work)
            : EvalAllen(AllenFormFor(s.kind, s.order), kx);
    const BigReal err = (series - ref).Abs();
    if (err > report.max_abs_error) {
      report.max_abs_error = err;
      report.argmax_x = x;
    }
  }
  return report;
}

AccuracyReport AllenAccuracyScan(AllenForm form, const Rat& x_lo,
                                 const Rat& x_hi, int grid, int digits) {
  const Kind kind =
      form == AllenForm::kJ0 || form == AllenForm::kJ1 ? Kind::kJ : Kind::kI;
  const int order = form == AllenForm::kJ0 || form == AllenForm::kI0 ? 0 : 1;
  AccuracyReport report;
  report.x_lo = x_lo;
  report.x_hi = x_hi;
  report.grid_points = grid;
  report.max_abs_error = BigReal(digits);
  report.argmax_x = x_lo;
  for (const Rat& x : Grid(x_lo, x_hi, grid)) {
    const BigReal xr(x, digits);
    const BigReal err =
        (EvalAllen(form, xr) - MaclaurinValue(kind, order, xr, digits)).Abs();
    if (err > report.max_abs_error) {
      report.max_abs_error = err;
      report.argmax_x = x;
    }
  }
  return report;
}

}  // namespace flbessel
