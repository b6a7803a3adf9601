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

#include "flbessel/powerprime.h"

#include <utility>

#include "flbessel/legendre.h"

namespace flbessel {

PowerSeries ToPowerSeries(const FLSeries& s, int max_power) {
  if (max_power < 0) throw DomainError("max_power must be nonnegative");
  PowerSeries p;
  p.kind = s.kind;
  p.order = s.order;
  p.k = s.k;
  p.digits = s.digits;
  p.provenance = static_cast<int>(s.entries.size());
  const int work = s.digits + kGuardDigits;
  const int lmax = s.entries.empty() ? 0 : s.entries.back().L;
  const std::vector<LegendreMonomials> table = MonomialTable(lmax);
  for (int m = s.order % 2; m <= max_power; m += 2) {
    BigReal c(work);
    for (const FLEntry& e : s.entries) {
      if (e.L < m) continue;
      const Rat& mono = table[static_cast<size_t>(e.L)].coeffs[static_cast<size_t>(m)];
      if (mono != 0) c += e.a * mono;
    }
    p.coeffs.push_back({m, std::move(c)});
  }
  return p;
}

std::vector<ExactTerm> MaclaurinExact(Kind kind, int N, int max_power,
                                      const Rat& k) {
  std::vector<ExactTerm> out;
  for (int m = N % 2; m <= max_power; m += 2) {
    out.push_back({m, MaclaurinCoefficient(kind, N, m, k)});
  }
  return out;
}

PowerSeries PowerSeriesFromExact(Kind kind, int N, const Rat& k,
                                 const std::vector<ExactTerm>& exact,
                                 int digits) {
  PowerSeries p;
  p.kind = kind;
  p.order = N;
  p.k = k;
  p.digits = digits;
  for (const ExactTerm& t : exact) {
    p.coeffs.push_back({t.power, BigReal(t.c, digits + kGuardDigits)});
  }
  return p;
}

bool FactorReport::all_certified() const {
  for (const FactorEntry& e : entries) {
    if (!e.certified) return false;
  }
  return true;
}

const FactorEntry* FactorReport::find(int power) const {
  for (const FactorEntry& e : entries) {
    if (e.power == power) return &e;
  }
  return nullptr;
}

BigReal DefaultRoundingTolerance() { return BigReal::Parse("1e-6", 20); }

FactorReport CertifyPrimeStructure(const PowerSeries& p, const BigReal& tol,
                                   int prime_bound) {
  FactorReport report;
  for (const PowerTerm& t : p.coeffs) {
    FactorEntry entry;
    entry.power = t.power;
    // Only the first `digits` digits of the stored value are trusted.
    BigReal c = t.c.Rounded(p.digits);
    if (p.k != 1 && p.k != 0) {
      Rat kp = 1;
      for (int i = 0; i < t.power; ++i) kp *= p.k;
      c /= kp;
    }
    if (c.is_zero()) {
      entry.reciprocal = BigReal(p.digits);
      entry.gap = BigReal(p.digits);
      report.entries.push_back(std::move(entry));
      continue;
    }
    try {
      ReciprocalFactorization f =
          FactorizeReciprocalWithGap(c, tol, prime_bound);
      entry.certified = true;
      entry.powers = std::move(f.powers);
      entry.reciprocal = std::move(f.reciprocal);
      entry.gap = std::move(f.gap);
    } catch (const NotNearInteger& e) {
      entry.reciprocal = e.reciprocal();
      entry.gap = e.gap();
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<PowerError> ComparePowerSeries(
    const PowerSeries& p, const std::vector<ExactTerm>& exact) {
  std::vector<PowerError> out;
  for (const PowerTerm& t : p.coeffs) {
    for (const ExactTerm& e : exact) {
      if (e.power != t.power) continue;
      const BigReal exact_value(e.c, t.c.digits());
      out.push_back({t.power, (t.c - exact_value).Abs()});
      break;
    }
  }
  return out;
}

}  // namespace flbessel
