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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "flbessel/emit.h"
#include "flbessel/mpnum.h"
#include "flbessel/powerprime.h"
#include "flbessel/series.h"
#include "flbessel/sumverify.h"
#include "json.hpp"

namespace flbessel::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxDigits = 5000;
constexpr int kEmitDefaultDigits = 34;
// Enough to resolve the reciprocal of the x^43 coefficient (about 1e54) to
// well under the default rounding tolerance.
constexpr int kIntegerListingDigits = 90;

struct Globals {
  int digits = kDefaultDigits;
  std::string format = "text";
  std::string out;
  bool digits_given = false;
};

bool Json_(const Globals& g) { return g.format == "json"; }

std::pair<std::string, std::string> SplitRange(const std::string& text) {
  const size_t dots = text.find("..");
  if (dots == std::string::npos) {
    throw ParseError("range '" + text + "' must look like lo..hi");
  }
  return {text.substr(0, dots), text.substr(dots + 2)};
}

std::pair<Rat, Rat> ParseRatRange(const std::string& text) {
  auto [lo, hi] = SplitRange(text);
  Rat a = ParseRat(lo);
  Rat b = ParseRat(hi);
  if (b < a) throw ParseError("range '" + text + "' is empty");
  return {a, b};
}

std::pair<int, int> ParseIntRange(const std::string& text) {
  auto [lo, hi] = SplitRange(text);
  int a = 0;
  int b = 0;
  try {
    size_t used = 0;
    a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
  } catch (const std::logic_error&) {
    throw ParseError("range '" + text + "' must hold integers");
  }
  if (a < 0 || b < a) throw ParseError("range '" + text + "' is invalid");
  return {a, b};
}

// "+N" means h + N; a bare "N" is absolute.
struct TermCount {
  bool relative = true;
  int value = 80;
  int For(int h) const { return relative ? h + value : value; }
};

TermCount ParseTermCount(const std::string& text) {
  TermCount t;
  std::string body = text;
  t.relative = !body.empty() && body[0] == '+';
  if (t.relative) body.erase(0, 1);
  try {
    size_t used = 0;
    t.value = std::stoi(body, &used);
    if (used != body.size()) throw std::invalid_argument(body);
  } catch (const std::logic_error&) {
    throw ParseError("term count '" + text + "' must be N or +N");
  }
  if (t.value < 1) throw ParseError("term count must be positive");
  return t;
}

void CheckOrder(int order) {
  if (order < 0) throw ParseError("order must be nonnegative");
}

// --- commands --------------------------------------------------------------

struct CoeffsArgs {
  std::string kind;
  int order = 0;
  std::string k;
  std::optional<int> lmax;
  std::optional<std::string> threshold;
};

FLSeries BuildFromArgs(Kind kind, int order, const Rat& k,
                       const std::optional<int>& lmax,
                       const std::optional<std::string>& threshold,
                       int digits) {
  if (lmax) {
    if (*lmax < 0) throw ParseError("--lmax must be nonnegative");
    return BuildSeries(kind, order, k, LMax{*lmax}, digits);
  }
  const BigReal t = threshold ? BigReal::Parse(*threshold, 20)
                              : DefaultTailThreshold(digits);
  if (t.sign() <= 0) throw ParseError("--threshold must be positive");
  return BuildSeries(kind, order, k, TailThreshold{t}, digits);
}

int CmdCoeffs(const Globals& g, const CoeffsArgs& a, std::ostream& out) {
  const Kind kind = ParseKind(a.kind);
  CheckOrder(a.order);
  const Rat k = ParseRat(a.k);
  const FLSeries s = BuildFromArgs(kind, a.order, k, a.lmax, a.threshold,
                                   g.digits);
  if (Json_(g)) {
    out << EmitJson(s);
    return kSuccess;
  }
  for (const FLEntry& e : s.entries) {
    out << e.L << ' ' << e.a.ToString(s.digits) << '\n';
  }
  return kSuccess;
}

struct EvalArgs {
  std::string kind;
  int order = 0;
  std::string k;
  std::string x;
  std::optional<int> lmax;
};

int CmdEval(const Globals& g, const EvalArgs& a, std::ostream& out) {
  const Kind kind = ParseKind(a.kind);
  CheckOrder(a.order);
  const Rat k = ParseRat(a.k);
  const Rat x = ParseRat(a.x);
  const FLSeries s =
      BuildFromArgs(kind, a.order, k, a.lmax, std::nullopt, g.digits);
  const BigReal value = EvalSeries(s, x, g.digits);
  if (Json_(g)) {
    Json j;
    j["schema"] = kJsonSchemaVersion;
    j["type"] = "eval";
    j["kind"] = KindName(kind);
    j["order"] = a.order;
    j["k"] = RatToString(k);
    j["x"] = RatToString(x);
    j["entries"] = s.entries.size();
    j["digits"] = g.digits;
    j["value"] = value.ToString(g.digits);
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  out << value.ToString(g.digits) << '\n';
  return kSuccess;
}

struct PowerArgs {
  std::string kind;
  int order = 0;
  std::string k;
  int max_power = 42;
  int terms = 74;
  bool factorize = false;
  std::string tol = "1e-6";
};

int CmdPower(const Globals& g, const PowerArgs& a, std::ostream& out) {
  const Kind kind = ParseKind(a.kind);
  CheckOrder(a.order);
  const Rat k = ParseRat(a.k);
  if (a.max_power < 0) throw ParseError("--max-power must be nonnegative");
  if (a.terms < 1) throw ParseError("--terms must be positive");
  const BigReal tol = BigReal::Parse(a.tol, 20);
  const int lmax = a.order % 2 + 2 * (a.terms - 1);
  // Reciprocals of high-power coefficients exceed 1e50, so certification
  // runs at a precision that resolves them to well below the tolerance.
  const int work = a.factorize ? std::max(g.digits, kIntegerListingDigits)
                               : g.digits;
  const FLSeries s = BuildSeries(kind, a.order, k, LMax{lmax}, work);
  PowerSeries p = ToPowerSeries(s, a.max_power);
  std::optional<FactorReport> report;
  if (a.factorize) report = CertifyPrimeStructure(p, tol);
  for (PowerTerm& t : p.coeffs) t.c = t.c.Rounded(g.digits);
  p.digits = g.digits;
  if (Json_(g)) {
    Json j;
    j["schema"] = kJsonSchemaVersion;
    j["type"] = "power_result";
    j["power_series"] = Json::parse(EmitJson(p));
    if (report) j["factor_report"] = Json::parse(EmitJson(*report));
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  for (const PowerTerm& t : p.coeffs) {
    out << t.power << ' ' << t.c.ToString(p.digits);
    if (report) {
      const FactorEntry* e = report->find(t.power);
      if (e->certified) {
        out << " 1/(" << e->powers.ToString() << ") gap "
            << e->gap.ToString(3);
      } else {
        out << " not-near-integer reciprocal "
            << e->reciprocal.ToString(std::min(p.digits, 30));
      }
    }
    out << '\n';
  }
  return kSuccess;
}

struct VerifyArgs {
  std::string family = "j0";
  std::string h_range = "0..0";
  std::string k = "1";
  std::string terms = "+80";
  std::string tol = "1e-33";
  std::string variant = "pochhammer";
};

int CmdVerify(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  const Family family = ParseFamily(a.family);
  const auto [h_lo, h_hi] = ParseIntRange(a.h_range);
  const Rat k = ParseRat(a.k);
  const TermCount terms = ParseTermCount(a.terms);
  const BigReal tol = BigReal::Parse(a.tol, 20);
  const Variant variant = ParseVariant(a.variant);
  SummedSeries series(family, k, g.digits);
  std::vector<IdentityReport> reports;
  for (int h = h_lo; h <= h_hi; ++h) {
    SumSpec spec;
    spec.family = family;
    spec.variant = variant;
    spec.h = h;
    spec.k = k;
    spec.l_terms = terms.For(h);
    spec.digits = g.digits;
    reports.push_back(VerifyIdentity(series, spec, tol));
  }
  const bool all_pass = std::all_of(reports.begin(), reports.end(),
                                    [](const auto& r) { return r.pass; });
  if (Json_(g)) {
    Json j;
    j["schema"] = kJsonSchemaVersion;
    j["type"] = "verify_result";
    Json list = Json::array();
    for (const IdentityReport& r : reports) list.push_back(Json::parse(EmitJson(r)));
    j["reports"] = list;
    j["all_pass"] = all_pass;
    out << j.dump(2) << '\n';
  } else {
    size_t passed = 0;
    for (const IdentityReport& r : reports) {
      passed += r.pass ? 1 : 0;
      out << "h=" << r.spec.h << " terms=" << r.spec.l_terms
          << " lhs=" << r.lhs.ToString(std::min(g.digits, 40))
          << " rhs=" << r.rhs.ToString(std::min(g.digits, 40))
          << " rel_diff=" << r.rel_diff.ToString(3) << ' '
          << (r.pass ? "PASS" : "FAIL") << '\n';
    }
    out << passed << '/' << reports.size() << " identities verified\n";
  }
  return all_pass ? kSuccess : kVerificationFailed;
}

int CmdTable1(const Globals& g, std::ostream& out) {
  constexpr int kRows = 17;
  const FLSeries s =
      BuildSeries(Kind::kJ, 0, 1, LMax{2 * (kRows - 1)}, g.digits);
  Json rows = Json::array();
  for (int n = 1; n <= kRows; ++n) {
    const PowerSeries p = ToPowerSeries(Truncated(s, n), 0);
    const std::string value = p.coeffs.front().c.ToString(g.digits);
    if (Json_(g)) {
      rows.push_back(Json::array({n - 1, value}));
    } else {
      out << "S_" << n - 1 << ' ' << value << '\n';
    }
  }
  if (Json_(g)) {
    Json j;
    j["schema"] = kJsonSchemaVersion;
    j["type"] = "table1";
    j["digits"] = g.digits;
    j["rows"] = rows;
    out << j.dump(2) << '\n';
  }
  return kSuccess;
}

struct BenchArgs {
  std::string which = "j0";
  std::optional<std::string> range;
  int grid = 121;
  int lmax = 12;
};

int CmdBench(const Globals& g, const BenchArgs& a, std::ostream& out) {
  const AllenForm form = ParseAllenForm(a.which);
  if (a.grid < 2) throw ParseError("--grid must be at least 2");
  if (a.lmax < 0) throw ParseError("--lmax must be nonnegative");
  const Rat edge = AllenRange(form);
  const auto [lo, hi] = a.range ? ParseRatRange(*a.range)
                                : std::pair<Rat, Rat>{Rat(-edge), edge};
  const Kind kind =
      form == AllenForm::kJ0 || form == AllenForm::kJ1 ? Kind::kJ : Kind::kI;
  const int order = form == AllenForm::kJ0 || form == AllenForm::kI0 ? 0 : 1;
  const AccuracyReport allen = AllenAccuracyScan(form, lo, hi, a.grid, g.digits);
  const FLSeries s = BuildSeries(kind, order, 1, LMax{a.lmax}, g.digits);
  const AccuracyReport fl =
      AccuracyScan(s, lo, hi, a.grid, Reference::kMaclaurin);
  const bool outside = lo < -edge || hi > edge;
  if (Json_(g)) {
    Json j;
    j["schema"] = kJsonSchemaVersion;
    j["type"] = "bench";
    j["which"] = AllenFormName(form);
    j["outside_published_range"] = outside;
    j["allen"] = Json::parse(EmitJson(allen));
    j["fl_lmax"] = a.lmax;
    j["fl"] = Json::parse(EmitJson(fl));
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  auto line = [&](const std::string& label, const AccuracyReport& r) {
    out << label << " max_abs_error " << r.max_abs_error.ToString(3)
        << " at x = " << r.argmax_x.get_str() << '\n';
  };
  out << AllenFormName(form) << " on [" << lo.get_str() << ", " << hi.get_str()
      << "], " << a.grid << " points"
      << (outside ? " (outside the published range)" : "") << '\n';
  line("polynomial   ", allen);
  line("FL L<=" + std::to_string(a.lmax) + std::string(
           a.lmax < 10 ? "     " : "    "), fl);
  return kSuccess;
}

struct EmitArgs {
  std::string what = "j0_legendre";
  std::string dialect = "legacy";
  bool exact_layout = false;
};

int CmdEmit(const Globals& g, const EmitArgs& a, std::ostream& out) {
  EmitTarget t = ListingLayout(a.what);
  const Dialect dialect = ParseDialect(a.dialect);
  const bool integer_block = t.dialect == Dialect::kIntegerPower;
  if (!a.exact_layout) {
    t.term_digits.clear();
    t.line_terms.clear();
    t.digits = g.digits_given ? g.digits : kEmitDefaultDigits;
    if (!integer_block) t.dialect = dialect;
  }
  if (g.format == "json") t.dialect = Dialect::kJson;
  const int display = t.term_digits.empty()
                          ? t.digits
                          : *std::max_element(t.term_digits.begin(),
                                              t.term_digits.end());
  const bool legendre = a.what.find("legendre") != std::string::npos;
  const char letter = a.what[0];
  const int order = a.what[1] - '0';
  const Kind kind = letter == 'j' ? Kind::kJ : Kind::kI;
  if (legendre) {
    static const int kLmax[2][2] = {{42, 43}, {46, 45}};
    const int lmax = kLmax[kind == Kind::kJ ? 0 : 1][order];
    const FLSeries s = BuildSeries(kind, order, 1, LMax{lmax},
                                   std::max(display, kDefaultDigits));
    out << EmitLegendreCode(s, t);
    return kSuccess;
  }
  // 74 entries for J0 and 78 for J1 (through x^42 and x^43).
  const int entries = order == 0 ? 74 : 78;
  const int max_power = order == 0 ? 42 : 43;
  const int digits = integer_block ? std::max(display, kIntegerListingDigits)
                                   : std::max(display, kDefaultDigits);
  const FLSeries s = BuildSeries(kind, order, 1,
                                 LMax{order + 2 * (entries - 1)}, digits);
  const PowerSeries p = ToPowerSeries(s, max_power);
  if (integer_block && t.dialect != Dialect::kJson) {
    const FactorReport report = CertifyPrimeStructure(p);
    out << EmitPowerCode(p, t, &report);
    return kSuccess;
  }
  out << EmitPowerCode(p, t);
  return kSuccess;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"High-precision Fourier-Legendre expansions of Bessel functions",
               "flbessel"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  auto* digits_opt =
      app.add_option("--digits", g.digits, "Significant digits (default 50)")
          ->check(CLI::Range(1, kMaxDigits));
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", g.out, "Write results to this file");

  CoeffsArgs coeffs;
  auto* c = app.add_subcommand("coeffs", "Fourier-Legendre coefficient table");
  c->add_option("kind", coeffs.kind, "J or I")->required();
  c->add_option("order", coeffs.order, "Order N")->required();
  c->add_option("k", coeffs.k, "Scale k (rational or decimal)")->required();
  auto* c_lmax = c->add_option("--lmax", coeffs.lmax, "Largest L");
  c->add_option("--threshold", coeffs.threshold, "Tail threshold")
      ->excludes(c_lmax);

  EvalArgs eval;
  auto* e = app.add_subcommand("eval", "Evaluate a truncated series");
  e->add_option("kind", eval.kind, "J or I")->required();
  e->add_option("order", eval.order, "Order N")->required();
  e->add_option("k", eval.k, "Scale k")->required();
  e->add_option("x", eval.x, "Argument x")->required();
  e->add_option("--lmax", eval.lmax, "Largest L");

  PowerArgs power;
  auto* p = app.add_subcommand("power", "Fold a series into monomials");
  p->add_option("kind", power.kind, "J or I")->required();
  p->add_option("order", power.order, "Order N")->required();
  p->add_option("k", power.k, "Scale k")->required();
  p->add_option("--max-power", power.max_power, "Highest power (default 42)");
  p->add_option("--terms", power.terms,
                "Fourier-Legendre entries folded in (default 74)");
  p->add_flag("--factorize", power.factorize, "Factor coefficient reciprocals");
  p->add_option("--tol", power.tol, "Rounding gap tolerance (default 1e-6)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check summed-series identities");
  v->add_option("--family", verify.family, "j0 or j1")
      ->check(CLI::IsMember({"j0", "j1"}));
  v->add_option("--h-range", verify.h_range, "lo..hi (default 0..0)");
  v->add_option("--k", verify.k, "Scale k (default 1)");
  v->add_option("--terms", verify.terms, "N or +N for h+N (default +80)");
  v->add_option("--tol", verify.tol, "Relative tolerance (default 1e-33)");
  v->add_option("--variant", verify.variant, "Summand bracket form")
      ->check(CLI::IsMember({"pochhammer", "reflected", "gammaform"}));

  auto* t1 = app.add_subcommand("table1", "Convergence of the x^0 coefficient");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench",
                               "Polynomial approximation vs truncated series");
  b->add_option("--which", bench.which, "j0, j1, i0 or i1")
      ->check(CLI::IsMember({"j0", "j1", "i0", "i1"}));
  b->add_option("--range", bench.range, "lo..hi (default: published range)");
  b->add_option("--grid", bench.grid, "Grid points (default 121)");
  b->add_option("--lmax", bench.lmax, "Largest L of the series (default 12)");

  EmitArgs emit;
  auto* em = app.add_subcommand("emit", "Render a listing as code");
  em->add_option("--what", emit.what, "Listing name")
      ->check(CLI::IsMember(ListingLayoutNames()));
  em->add_option("--dialect", emit.dialect,
                 "legacy, free, cas, integer or json (default legacy)")
      ->check(CLI::IsMember({"legacy", "free", "cas", "integer", "json"}));
  em->add_flag("--paper-exact", emit.exact_layout,
               "Per-term digits and layout of the reference listing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    std::ostringstream msg;
    const int code = app.exit(ex, out, msg);
    err << msg.str();
    return code == 0 ? kSuccess : kUsageError;
  }
  g.digits_given = digits_opt->count() > 0;

  std::ostringstream buffer;
  int code = kSuccess;
  try {
    if (c->parsed()) {
      code = CmdCoeffs(g, coeffs, buffer);
    } else if (e->parsed()) {
      code = CmdEval(g, eval, buffer);
    } else if (p->parsed()) {
      code = CmdPower(g, power, buffer);
    } else if (v->parsed()) {
      code = CmdVerify(g, verify, buffer);
    } else if (t1->parsed()) {
      code = CmdTable1(g, buffer);
    } else if (b->parsed()) {
      code = CmdBench(g, bench, buffer);
    } else if (em->parsed()) {
      code = CmdEmit(g, emit, buffer);
    }
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  } catch (const Error& ex) {
    err << "computation failed: " << ex.what() << '\n';
    return kComputationError;
  }

  if (g.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(g.out, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: cannot write " << g.out << '\n';
      return kUsageError;
    }
  }
  return code;
}

}  // namespace flbessel::cli
