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

// Text output: expression blocks in several code dialects and a versioned
// JSON encoding of every result type. See docs/json_schema.md.

#ifndef FLBESSEL_EMIT_H_
#define FLBESSEL_EMIT_H_

#include <string>
#include <string_view>
#include <vector>

#include "flbessel/mpnum.h"
#include "flbessel/powerprime.h"
#include "flbessel/series.h"
#include "flbessel/sumverify.h"

namespace flbessel {

inline constexpr int kJsonSchemaVersion = 1;
inline constexpr int kFixedFormWidth = 72;

// Display digits exceed the precision the series is guaranteed to.
class DigitsExceedPrecision : public Error {
 public:
  using Error::Error;
};

// Integer-power output was requested without a fully certified report.
class UncertifiedFactorization : public Error {
 public:
  using Error::Error;
};

enum class Dialect { kLegacyFixedForm, kFreeForm, kCas, kIntegerPower, kJson };

Dialect ParseDialect(std::string_view text);  // "legacy", "free", "cas", ...
std::string DialectName(Dialect dialect);

struct EmitTarget {
  Dialect dialect = Dialect::kLegacyFixedForm;
  int digits = 34;
  // "J0" renders as "J0(x)"; a name containing '(' is used as is.
  std::string name = "J0";

  // Layout knobs. The defaults give the uniform layout.
  int indent = 8;
  std::string assign = " = ";
  // Per-term significant digits; when non-empty it overrides `digits`.
  std::vector<int> term_digits;
  // Integer-power dialect: terms per line; empty packs greedily.
  std::vector<int> line_terms;
};

// Layout reproducing one of the reference listings: "j0_legendre",
// "j1_legendre", "i0_legendre", "i1_legendre", "j0_power", "j1_power",
// "j0_integer", "j1_integer".
EmitTarget ListingLayout(std::string_view block);
std::vector<std::string> ListingLayoutNames();

// Fortran-style literal with `digits` significant digits: fixed notation
// down to 1e-5, otherwise d.ddde-x. An integer value keeps a trailing '.'.
// With trim set, trailing fractional zeros are dropped.
std::string FortranLiteral(const BigReal& value, int digits, bool trim);

std::string EmitLegendreCode(const FLSeries& s, const EmitTarget& t);
std::string EmitPowerCode(const PowerSeries& p, const EmitTarget& t,
                          const FactorReport* report = nullptr);

// JSON text, pretty-printed with two-space indent.
std::string EmitJson(const FLSeries& s);
std::string EmitJson(const PowerSeries& p);
std::string EmitJson(const PrimePowers& p);
std::string EmitJson(const FactorReport& r);
std::string EmitJson(const IdentityReport& r);
std::string EmitJson(const AccuracyReport& r);

FLSeries ParseFLSeriesJson(std::string_view text);
PowerSeries ParsePowerSeriesJson(std::string_view text);
PrimePowers ParsePrimePowersJson(std::string_view text);
FactorReport ParseFactorReportJson(std::string_view text);
IdentityReport ParseIdentityReportJson(std::string_view text);
AccuracyReport ParseAccuracyReportJson(std::string_view text);

}  // namespace flbessel

#endif  // FLBESSEL_EMIT_H_
