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

#include "flbessel/emit.h"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "json.hpp"

namespace flbessel {
namespace {

using Json = nlohmann::ordered_json;

struct Token {
  bool negative = false;
  std::string text;
};

std::string Lhs(const EmitTarget& t) {
  return t.name.find('(') != std::string::npos ? t.name : t.name + "(x)";
}

int TermDigits(const EmitTarget& t, size_t index) {
  if (t.term_digits.empty()) return t.digits;
  if (index >= t.term_digits.size()) return t.term_digits.back();
  return t.term_digits[index];
}

void CheckDigits(const EmitTarget& t, int available) {
  const int wanted =
      t.term_digits.empty()
          ? t.digits
          : *std::max_element(t.term_digits.begin(), t.term_digits.end());
  if (wanted > available) {
    throw DigitsExceedPrecision("requested " + std::to_string(wanted) +
                                " digits from values guaranteed to " +
                                std::to_string(available));
  }
  if (wanted < 1) throw DomainError("display digits must be positive");
}

std::string Spaces(int n) { return std::string(static_cast<size_t>(n), ' '); }

// Packs tokens after `head` into lines of at most kFixedFormWidth columns,
// not counting the trailing join. Continuation lines start with `cont`;
// `tail` is appended after the join on a broken line.
std::string PackLines(const std::string& head, const std::vector<Token>& tokens,
                      const std::string& cont, const std::string& tail) {
  std::string out;
  std::string line = head;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (i == 0) {
      line += (tok.negative ? "-" : "") + tok.text;
      continue;
    }
    const std::string join = tok.negative ? " - " : " + ";
    if (line.size() + join.size() + tok.text.size() <=
        static_cast<size_t>(kFixedFormWidth)) {
      line += join + tok.text;
    } else {
      out += line + join + tail + "\n";
      line = cont + tok.text;
    }
  }
  return out + line + "\n";
}

std::string Layout(const EmitTarget& t, const std::vector<Token>& tokens) {
  const std::string lhs = Lhs(t);
  if (tokens.empty()) return Spaces(t.indent) + lhs + t.assign + "0\n";
  switch (t.dialect) {
    case Dialect::kLegacyFixedForm:
      return PackLines(Spaces(t.indent) + lhs + t.assign, tokens, "     -  ",
                       "");
    case Dialect::kFreeForm:
      return PackLines(Spaces(t.indent) + lhs + t.assign, tokens,
                       Spaces(t.indent + 4), "&");
    case Dialect::kCas: {
      std::string line = lhs + t.assign;
      for (size_t i = 0; i < tokens.size(); ++i) {
        if (i == 0) {
          line += (tokens[i].negative ? "-" : "") + tokens[i].text;
        } else {
          line += (tokens[i].negative ? " - " : " + ") + tokens[i].text;
        }
      }
      return line + "\n";
    }
    default:
      throw DomainError("dialect " + DialectName(t.dialect) +
                        " is not a decimal code dialect");
  }
}

std::string PowerText(int m, Dialect dialect) {
  if (m == 0) return "";
  if (m == 1) return "x";
  return dialect == Dialect::kCas ? "x^" + std::to_string(m)
                                  : "x**" + std::to_string(m);
}

std::string IntegerTerm(int m, const PrimePowers& powers) {
  std::string factors;
  size_t count = 0;
  bool bare = false;
  for (const auto& [p, e] : powers.exponents) {
    if (!factors.empty()) factors += '*';
    factors += std::to_string(p);
    if (e != 1) factors += "^" + std::to_string(e);
    bare = e == 1;
    ++count;
  }
  if (powers.leftover != 1) {
    if (!factors.empty()) factors += '*';
    factors += powers.leftover.get_str();
    bare = false;
    ++count;
  }
  std::string numer = m == 0 ? "1" : (m == 1 ? "x" : "x^" + std::to_string(m));
  if (count == 0) return numer;
  if (count == 1 && bare) return numer + "/" + factors;
  return numer + "/(" + factors + ")";
}

std::string EmitIntegerPower(const PowerSeries& p, const EmitTarget& t,
                             const FactorReport* report) {
  if (report == nullptr) {
    throw UncertifiedFactorization("integer-power output needs a factor report");
  }
  std::vector<Token> tokens;
  for (const PowerTerm& term : p.coeffs) {
    const FactorEntry* entry = report->find(term.power);
    if (entry == nullptr || !entry->certified) {
      throw UncertifiedFactorization("power " + std::to_string(term.power) +
                                     " has no certified factorization");
    }
    tokens.push_back({entry->powers.sign < 0,
                      IntegerTerm(term.power, entry->powers)});
  }
  const std::string head = Spaces(t.indent) + Lhs(t) + t.assign;
  if (tokens.empty()) return head + "0\n";
  // Every term after the first carries its sign, including the first term
  // of a continuation line.
  auto piece = [&](size_t i) {
    const Token& tok = tokens[i];
    if (i == 0) return (tok.negative ? "-" : "") + tok.text;
    return (tok.negative ? "-" : "+") + tok.text;
  };
  std::string out;
  std::string line = head;
  size_t line_index = 0;
  size_t on_line = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const std::string text = piece(i);
    bool fits;
    if (!t.line_terms.empty()) {
      const size_t limit = line_index < t.line_terms.size()
                               ? static_cast<size_t>(t.line_terms[line_index])
                               : 1;
      fits = on_line < limit;
    } else {
      fits = on_line == 0 ||
             line.size() + text.size() <= static_cast<size_t>(kFixedFormWidth);
    }
    if (!fits) {
      out += line + "\n";
      line.clear();
      ++line_index;
      on_line = 0;
    }
    line += text;
    ++on_line;
  }
  return out + line + "\n";
}

// --- JSON helpers ----------------------------------------------------------

constexpr int kErrorDigits = 12;

Json Parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void ExpectType(const Json& j, const char* type) {
  if (!j.is_object() || !j.contains("schema") ||
      j.at("schema") != kJsonSchemaVersion) {
    throw ParseError("unsupported or missing schema version");
  }
  if (j.value("type", "") != type) {
    throw ParseError(std::string("expected a ") + type + " document");
  }
}

template <typename F>
auto Guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
}

std::string RenderError(const BigReal& v) {
  return v.ToString(std::min(v.digits(), kErrorDigits));
}

Json PrimePowersJson(const PrimePowers& p) {
  Json exps = Json::object();
  for (const auto& [prime, e] : p.exponents) exps[std::to_string(prime)] = e;
  Json j;
  j["sign"] = p.sign;
  j["exponents"] = exps;
  j["leftover"] = p.leftover.get_str();
  return j;
}

PrimePowers PrimePowersFromJson(const Json& j) {
  PrimePowers p;
  p.sign = j.at("sign").get<int>();
  if (p.sign != 1 && p.sign != -1) throw ParseError("sign must be +1 or -1");
  for (const auto& [key, value] : j.at("exponents").items()) {
    const unsigned long prime = std::stoul(key);
    const auto e = value.get<unsigned long>();
    if (e != 0) p.exponents[prime] = e;
  }
  p.leftover = BigInt(j.at("leftover").get<std::string>(), 10);
  return p;
}

Json Envelope(const char* type) {
  Json j;
  j["schema"] = kJsonSchemaVersion;
  j["type"] = type;
  return j;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

Dialect ParseDialect(std::string_view text) {
  if (text == "legacy" || text == "legacy-fixed-form") {
    return Dialect::kLegacyFixedForm;
  }
  if (text == "free" || text == "free-form") return Dialect::kFreeForm;
  if (text == "cas") return Dialect::kCas;
  if (text == "integer" || text == "integer-power") {
    return Dialect::kIntegerPower;
  }
  if (text == "json") return Dialect::kJson;
  throw ParseError("unknown dialect '" + std::string(text) + "'");
}

std::string DialectName(Dialect dialect) {
  switch (dialect) {
    case Dialect::kLegacyFixedForm:
      return "legacy-fixed-form";
    case Dialect::kFreeForm:
      return "free-form";
    case Dialect::kCas:
      return "cas";
    case Dialect::kIntegerPower:
      return "integer-power";
    case Dialect::kJson:
      return "json";
  }
  return "legacy-fixed-form";
}

std::vector<std::string> ListingLayoutNames() {
  return {"j0_legendre", "j1_legendre", "i0_legendre", "i1_legendre",
          "j0_power",    "j1_power",    "j0_integer",  "j1_integer"};
}

EmitTarget ListingLayout(std::string_view block) {
  auto repeat = [](std::vector<int> v, int value, int count) {
    v.insert(v.end(), static_cast<size_t>(count), value);
    return v;
  };
  EmitTarget t;
  t.dialect = Dialect::kLegacyFixedForm;
  if (block == "j0_legendre") {
    t.name = "J0";
    t.term_digits = repeat({32, 34, 34, 34, 33}, 34, 17);
  } else if (block == "j1_legendre") {
    t.name = "J1";
    t.term_digits = repeat({}, 34, 22);
  } else if (block == "i0_legendre") {
    t.name = "I(0,x)";
    t.indent = 9;
    t.term_digits = repeat(repeat(repeat({}, 34, 10), 35, 1), 34, 13);
  } else if (block == "i1_legendre") {
    t.name = "I(1,x)";
    t.term_digits = repeat({}, 34, 23);
  } else if (block == "j0_power") {
    t.name = "J0";
    t.term_digits = repeat(repeat({1, 2, 5}, 37, 17), 38, 2);
  } else if (block == "j1_power") {
    t.name = "J1";
    t.assign = "= ";
    t.term_digits = repeat({1, 3}, 37, 20);
  } else if (block == "j0_integer" || block == "j1_integer") {
    t.name = block == "j0_integer" ? "J0" : "J1";
    t.dialect = Dialect::kIntegerPower;
    t.indent = 0;
    t.assign = "=";
    t.line_terms = {5, 3, 3, 2, 2, 2, 1, 1, 1, 1, 1};
  } else {
    throw ParseError("unknown listing '" + std::string(block) + "'");
  }
  if (!t.term_digits.empty()) {
    t.digits = *std::max_element(t.term_digits.begin(), t.term_digits.end());
  }
  return t;
}

std::string FortranLiteral(const BigReal& value, int digits, bool trim) {
  const BigReal::Decimal d = value.ToDecimal(digits);
  std::string mant = d.digits;
  const long e = value.is_zero() ? 0 : d.exponent10;
  std::string out = d.negative ? "-" : "";
  if (e >= -5) {
    std::string int_part;
    std::string frac_part;
    if (e < 0) {
      int_part = "0";
      frac_part = std::string(static_cast<size_t>(-e - 1), '0') + mant;
    } else if (e + 1 >= static_cast<long>(mant.size())) {
      int_part = mant + std::string(static_cast<size_t>(e + 1) - mant.size(), '0');
    } else {
      int_part = mant.substr(0, static_cast<size_t>(e + 1));
      frac_part = mant.substr(static_cast<size_t>(e + 1));
    }
    if (trim) {
      while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
    }
    return out + int_part + "." + frac_part;
  }
  std::string frac_part = mant.substr(1);
  if (trim) {
    while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
  }
  return out + mant.substr(0, 1) + "." + frac_part + "e" + std::to_string(e);
}

std::string EmitLegendreCode(const FLSeries& s, const EmitTarget& t) {
  if (t.dialect == Dialect::kJson) return EmitJson(s);
  if (t.dialect == Dialect::kIntegerPower) {
    throw DomainError("integer-power dialect applies to power series only");
  }
  CheckDigits(t, s.digits);
  std::vector<Token> tokens;
  for (size_t i = 0; i < s.entries.size(); ++i) {
    const FLEntry& e = s.entries[i];
    tokens.push_back({e.a.sign() < 0,
                      FortranLiteral(e.a.Abs(), TermDigits(t, i), false) +
                          "*P(" + std::to_string(e.L) + ",x)"});
  }
  return Layout(t, tokens);
}

std::string EmitPowerCode(const PowerSeries& p, const EmitTarget& t,
                          const FactorReport* report) {
  if (t.dialect == Dialect::kJson) return EmitJson(p);
  if (t.dialect == Dialect::kIntegerPower) {
    return EmitIntegerPower(p, t, report);
  }
  CheckDigits(t, p.digits);
  const bool trim = t.term_digits.empty();
  std::vector<Token> tokens;
  for (size_t i = 0; i < p.coeffs.size(); ++i) {
    const PowerTerm& term = p.coeffs[i];
    std::string text = FortranLiteral(term.c.Abs(), TermDigits(t, i), trim);
    const std::string power = PowerText(term.power, t.dialect);
    if (!power.empty()) text += "*" + power;
    tokens.push_back({term.c.sign() < 0, std::move(text)});
  }
  return Layout(t, tokens);
}

// --- JSON ------------------------------------------------------------------

std::string EmitJson(const FLSeries& s) {
  Json j = Envelope("fl_series");
  j["kind"] = KindName(s.kind);
  j["order"] = s.order;
  j["k"] = RatToString(s.k);
  Json entries = Json::array();
  for (const FLEntry& e : s.entries) {
    entries.push_back(Json::array({e.L, e.a.ToString(s.digits)}));
  }
  j["entries"] = entries;
  j["digits"] = s.digits;
  return Dump(j);
}

FLSeries ParseFLSeriesJson(std::string_view text) {
  const Json j = Parse(text);
  ExpectType(j, "fl_series");
  return Guarded([&] {
    FLSeries s;
    s.kind = ParseKind(j.at("kind").get<std::string>());
    s.order = j.at("order").get<int>();
    s.k = ParseRat(j.at("k").get<std::string>());
    s.digits = j.at("digits").get<int>();
    for (const Json& e : j.at("entries")) {
      s.entries.push_back(
          {e.at(0).get<int>(),
           BigReal::Parse(e.at(1).get<std::string>(), s.digits + kGuardDigits)});
    }
    return s;
  });
}

std::string EmitJson(const PowerSeries& p) {
  Json j = Envelope("power_series");
  j["kind"] = KindName(p.kind);
  j["order"] = p.order;
  j["k"] = RatToString(p.k);
  Json coeffs = Json::array();
  for (const PowerTerm& t : p.coeffs) {
    coeffs.push_back(Json::array({t.power, t.c.ToString(p.digits)}));
  }
  j["coeffs"] = coeffs;
  j["provenance"] = p.provenance;
  j["digits"] = p.digits;
  return Dump(j);
}

PowerSeries ParsePowerSeriesJson(std::string_view text) {
  const Json j = Parse(text);
  ExpectType(j, "power_series");
  return Guarded([&] {
    PowerSeries p;
    p.kind = ParseKind(j.at("kind").get<std::string>());
    p.order = j.at("order").get<int>();
    p.k = ParseRat(j.at("k").get<std::string>());
    p.provenance = j.at("provenance").get<int>();
    p.digits = j.at("digits").get<int>();
    for (const Json& c : j.at("coeffs")) {
      p.coeffs.push_back(
          {c.at(0).get<int>(),
           BigReal::Parse(c.at(1).get<std::string>(), p.digits + kGuardDigits)});
    }
    return p;
  });
}

std::string EmitJson(const PrimePowers& p) {
  Json j = Envelope("prime_powers");
  j.update(PrimePowersJson(p));
  return Dump(j);
}

PrimePowers ParsePrimePowersJson(std::string_view text) {
  const Json j = Parse(text);
  ExpectType(j, "prime_powers");
  return Guarded([&] { return PrimePowersFromJson(j); });
}

std::string EmitJson(const FactorReport& r) {
  Json j = Envelope("factor_report");
  Json entries = Json::array();
  for (const FactorEntry& e : r.entries) {
    Json item;
    item["power"] = e.power;
    item["status"] = e.certified ? "certified" : "not_near_integer";
    if (e.certified) item["prime_powers"] = PrimePowersJson(e.powers);
    item["digits"] = e.reciprocal.digits();
    item["reciprocal"] = e.reciprocal.ToString();
    item["gap"] = RenderError(e.gap);
    entries.push_back(item);
  }
  j["entries"] = entries;
  return Dump(j);
}

FactorReport ParseFactorReportJson(std::string_view text) {
  const Json j = Parse(text);
  ExpectType(j, "factor_report");
  return Guarded([&] {
    FactorReport r;
    for (const Json& item : j.at("entries")) {
      FactorEntry e;
      e.power = item.at("power").get<int>();
      const std::string status = item.at("status").get<std::string>();
      if (status != "certified" && status != "not_near_integer") {
        throw ParseError("unknown factor status '" + status + "'");
      }
      e.certified = status == "certified";
      if (e.certified) e.powers = PrimePowersFromJson(item.at("prime_powers"));
      e.reciprocal = BigReal::Parse(item.at("reciprocal").get<std::string>(),
                                    item.at("digits").get<int>());
      e.gap = BigReal::Parse(item.at("gap").get<std::string>());
      r.entries.push_back(std::move(e));
    }
    return r;
  });
}

std::string EmitJson(const IdentityReport& r) {
  Json j = Envelope("identity_report");
  j["family"] = FamilyName(r.spec.family);
  j["variant"] = VariantName(r.spec.variant);
  j["h"] = r.spec.h;
  j["k"] = RatToString(r.spec.k);
  j["l_terms"] = r.spec.l_terms;
  j["digits"] = r.spec.digits;
  j["lhs"] = r.lhs.ToString(r.spec.digits);
  j["rhs"] = r.rhs.ToString(r.spec.digits);
  j["rel_diff"] = RenderError(r.rel_diff);
  j["rel_tol"] = RenderError(r.rel_tol);
  j["pass"] = r.pass;
  return Dump(j);
}

IdentityReport ParseIdentityReportJson(std::string_view text) {
  const Json j = Parse(text);
  ExpectType(j, "identity_report");
  return Guarded([&] {
    IdentityReport r;
    r.spec.family = ParseFamily(j.at("family").get<std::string>());
    r.spec.variant = ParseVariant(j.at("variant").get<std::string>());
    r.spec.h = j.at("h").get<int>();
    r.spec.k = ParseRat(j.at("k").get<std::string>());
    r.spec.l_terms = j.at("l_terms").get<int>();
    r.spec.digits = j.at("digits").get<int>();
    r.lhs = BigReal::Parse(j.at("lhs").get<std::string>(), r.spec.digits);
    r.rhs = BigReal::Parse(j.at("rhs").get<std::string>(), r.spec.digits);
    r.rel_diff = BigReal::Parse(j.at("rel_diff").get<std::string>());
    r.rel_tol = BigReal::Parse(j.at("rel_tol").get<std::string>());
    r.pass = j.at("pass").get<bool>();
    return r;
  });
}

std::string EmitJson(const AccuracyReport& r) {
  Json j = Envelope("accuracy_report");
  j["x_range"] = Json::array({RatToString(r.x_lo), RatToString(r.x_hi)});
  j["grid_points"] = r.grid_points;
  j["max_abs_error"] = RenderError(r.max_abs_error);
  j["argmax_x"] = RatToString(r.argmax_x);
  return Dump(j);
}

AccuracyReport ParseAccuracyReportJson(std::string_view text) {
  const Json j = Parse(text);
  ExpectType(j, "accuracy_report");
  return Guarded([&] {
    AccuracyReport r;
    r.x_lo = ParseRat(j.at("x_range").at(0).get<std::string>());
    r.x_hi = ParseRat(j.at("x_range").at(1).get<std::string>());
    r.grid_points = j.at("grid_points").get<int>();
    r.max_abs_error = BigReal::Parse(j.at("max_abs_error").get<std::string>());
    r.argmax_x = ParseRat(j.at("argmax_x").get<std::string>());
    return r;
  });
}

}  // namespace flbessel
