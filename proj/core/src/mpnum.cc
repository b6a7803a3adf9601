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

#include "flbessel/mpnum.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <utility>

namespace flbessel {
namespace {

constexpr double kLog2Of10 = 3.3219280948873623;

struct DecimalParts {
  bool negative = false;
  std::string int_digits;
  std::string frac_digits;
  long exponent = 0;
};

// Validates the decimal grammar and splits the text into its parts.
DecimalParts SplitDecimal(std::string_view text) {
  DecimalParts parts;
  size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    parts.negative = text[i] == '-';
    ++i;
  }
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    parts.int_digits.push_back(text[i++]);
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      parts.frac_digits.push_back(text[i++]);
    }
  }
  if (parts.int_digits.empty() && parts.frac_digits.empty()) {
    throw ParseError("malformed number: '" + std::string(text) + "'");
  }
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    const size_t start = i;
    long exponent = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (exponent > 100000000) {
        throw ParseError("exponent out of range: '" + std::string(text) + "'");
      }
      exponent = exponent * 10 + (text[i++] - '0');
    }
    if (i == start) {
      throw ParseError("malformed exponent: '" + std::string(text) + "'");
    }
    parts.exponent = exp_negative ? -exponent : exponent;
  }
  if (i != text.size()) {
    throw ParseError("trailing characters in number: '" + std::string(text) +
                     "'");
  }
  return parts;
}

int SignificantDigits(const DecimalParts& parts) {
  std::string all = parts.int_digits + parts.frac_digits;
  const size_t first = all.find_first_not_of('0');
  if (first == std::string::npos) return 1;
  return static_cast<int>(all.size() - first);
}

BigInt TenToThe(unsigned long n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
  return r;
}

}  // namespace

Rat MakeRat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat ParseRat(std::string_view text) {
  const size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    const Rat num = ParseRat(text.substr(0, slash));
    const Rat den = ParseRat(text.substr(slash + 1));
    if (num.get_den() != 1 || den.get_den() != 1) {
      throw ParseError("fraction parts must be integers: '" +
                       std::string(text) + "'");
    }
    return MakeRat(num.get_num(), den.get_num());
  }
  const DecimalParts parts = SplitDecimal(text);
  std::string mantissa = parts.int_digits + parts.frac_digits;
  if (mantissa.empty()) mantissa = "0";
  BigInt num(mantissa, 10);
  if (parts.negative) num = -num;
  const long scale = parts.exponent - static_cast<long>(parts.frac_digits.size());
  if (scale >= 0) return Rat(num * TenToThe(static_cast<unsigned long>(scale)));
  return MakeRat(num, TenToThe(static_cast<unsigned long>(-scale)));
}

std::string RatToString(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

mpfr_prec_t DigitsToBits(int digits) {
  if (digits < 1) throw DomainError("precision must be at least one digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 4;
}

// --- BigReal ---------------------------------------------------------------

BigReal::BigReal(int digits) : digits_(digits) {
  mpfr_init2(value_, DigitsToBits(digits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, int digits) : BigReal(digits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const BigInt& value, int digits) : BigReal(digits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const Rat& value, int digits) : BigReal(digits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal BigReal::Parse(std::string_view text, int digits) {
  SplitDecimal(text);
  BigReal r(digits);
  const std::string s(text);
  mpfr_set_str(r.value_, s.c_str(), 10, MPFR_RNDN);
  return r;
}

BigReal BigReal::Parse(std::string_view text) {
  return Parse(text, SignificantDigits(SplitDecimal(text)));
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

void BigReal::Widen(int digits) {
  if (digits <= digits_) return;
  mpfr_prec_round(value_, DigitsToBits(digits), MPFR_RNDN);
  digits_ = digits;
}

BigReal BigReal::Rounded(int digits) const {
  BigReal r(digits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

BigReal BigReal::Abs() const {
  BigReal r(*this);
  mpfr_abs(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

long BigReal::Exponent10() const {
  if (is_zero()) throw DomainError("decimal exponent of zero");
  return ToDecimal(digits_).exponent10;
}

BigReal::Decimal BigReal::ToDecimal(int sig_digits) const {
  if (sig_digits < 1) throw DomainError("need at least one digit");
  Decimal d;
  if (is_zero()) {
    d.digits.assign(static_cast<size_t>(sig_digits), '0');
    return d;
  }
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(sig_digits),
                           value_, MPFR_RNDN);
  std::string s(raw);
  mpfr_free_str(raw);
  if (!s.empty() && s[0] == '-') {
    d.negative = true;
    s.erase(0, 1);
  }
  d.digits = std::move(s);
  d.exponent10 = static_cast<long>(exp) - 1;
  return d;
}

std::string BigReal::ToString(int sig_digits) const {
  if (is_zero()) return "0";
  const Decimal d = ToDecimal(sig_digits);
  std::string out = d.negative ? "-" : "";
  const long e = d.exponent10;
  const long n = static_cast<long>(d.digits.size());
  if (e >= -5 && e <= 20) {
    if (e < 0) {
      out += "0.";
      out.append(static_cast<size_t>(-e - 1), '0');
      out += d.digits;
    } else if (e + 1 >= n) {
      out += d.digits;
      out.append(static_cast<size_t>(e + 1 - n), '0');
    } else {
      out += d.digits.substr(0, static_cast<size_t>(e + 1));
      out += '.';
      out += d.digits.substr(static_cast<size_t>(e + 1));
    }
    return out;
  }
  out += d.digits[0];
  if (n > 1) {
    out += '.';
    out += d.digits.substr(1);
  }
  out += e < 0 ? "e-" : "e+";
  out += std::to_string(std::labs(e));
  return out;
}

BigInt BigReal::RoundToInteger() const {
  if (!mpfr_number_p(value_)) throw DomainError("non-finite value");
  BigInt r;
  mpfr_get_z(r.get_mpz_t(), value_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  Widen(rhs.digits_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  Widen(rhs.digits_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  Widen(rhs.digits_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  Widen(rhs.digits_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const Rat& rhs) {
  mpfr_mul_q(value_, value_, rhs.get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const Rat& rhs) {
  if (rhs == 0) throw DomainError("division by zero");
  mpfr_div_q(value_, value_, rhs.get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator+=(const Rat& rhs) {
  mpfr_add_q(value_, value_, rhs.get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigReal Sqrt(const BigReal& x) {
  if (x.sign() < 0) throw DomainError("square root of a negative number");
  BigReal r(x);
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal Pow(const BigReal& x, long n) {
  if (x.is_zero() && n < 0) throw DomainError("division by zero");
  BigReal r(x);
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

// --- special values --------------------------------------------------------

BigReal SqrtPi(int digits) {
  BigReal r(digits + kGuardDigits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
  return r.Rounded(digits);
}

HalfIntGamma GammaHalfIntExact(long twice_arg) {
  if (twice_arg <= 0) {
    throw DomainError("gamma undefined at nonpositive argument " +
                      std::to_string(twice_arg) + "/2");
  }
  if (twice_arg % 2 == 0) return {Rat(Factorial(twice_arg / 2 - 1)), false};
  // Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!)
  const long n = (twice_arg - 1) / 2;
  BigInt four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
  return {MakeRat(Factorial(2 * n), four_n * Factorial(n)), true};
}

BigReal GammaHalfInt(long twice_arg, int digits) {
  const HalfIntGamma g = GammaHalfIntExact(twice_arg);
  const int work = digits + kGuardDigits;
  BigReal r(g.rational, work);
  if (g.times_sqrt_pi) r *= SqrtPi(work);
  return r.Rounded(digits);
}

Rat Pochhammer(const Rat& a, long n) {
  if (n < 0) throw DomainError("Pochhammer length must be nonnegative");
  Rat r = 1;
  for (long i = 0; i < n; ++i) r *= a + i;
  return r;
}

Rat PochhammerReflect(const Rat& a, long n) {
  const Rat r = Pochhammer(a - n + 1, n);
  return n % 2 == 0 ? r : Rat(-r);
}

BigInt Factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt Binomial(long n, long r) {
  if (n < 0) throw DomainError("binomial with negative n");
  if (r < 0 || r > n) return 0;
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return b;
}

// --- prime powers ----------------------------------------------------------

std::vector<unsigned long> PrimesUpTo(int bound) {
  std::vector<unsigned long> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
  for (long p = 2; p <= bound; ++p) {
    if (composite[static_cast<size_t>(p)]) continue;
    primes.push_back(static_cast<unsigned long>(p));
    for (long q = p * p; q <= bound; q += p) {
      composite[static_cast<size_t>(q)] = true;
    }
  }
  return primes;
}

unsigned long PrimePowers::exponent(unsigned long prime) const {
  const auto it = exponents.find(prime);
  return it == exponents.end() ? 0 : it->second;
}

BigInt PrimePowers::Reconstruct() const {
  BigInt r = leftover;
  for (const auto& [p, e] : exponents) {
    BigInt pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
    r *= pe;
  }
  return sign < 0 ? BigInt(-r) : r;
}

std::string PrimePowers::ToString() const {
  std::string out;
  for (const auto& [p, e] : exponents) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e != 1) out += "^" + std::to_string(e);
  }
  if (leftover != 1) {
    if (!out.empty()) out += '*';
    out += leftover.get_str();
  }
  return out.empty() ? "1" : out;
}

PrimePowers TrialDivide(const BigInt& n, int prime_bound) {
  if (n == 0) throw DomainError("cannot factor zero");
  PrimePowers out;
  out.sign = n < 0 ? -1 : 1;
  BigInt rest = abs(n);
  for (unsigned long p : PrimesUpTo(prime_bound)) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.exponents[p] = e;
  }
  out.leftover = rest;
  return out;
}

NotNearInteger::NotNearInteger(const BigReal& reciprocal, const BigReal& gap)
    : Error("reciprocal " + reciprocal.ToString(std::min(reciprocal.digits(), 40)) +
            " is not within tolerance of an integer (gap " + gap.ToString(6) +
            ")"),
      reciprocal_(reciprocal),
      gap_(gap) {}

ReciprocalFactorization FactorizeReciprocalWithGap(const BigReal& c,
                                                   const BigReal& rounding_tol,
                                                   int prime_bound) {
  if (c.is_zero()) throw DomainError("cannot factor the reciprocal of zero");
  if (rounding_tol.sign() <= 0 || rounding_tol >= BigReal(Rat(1, 2), 16)) {
    throw DomainError("rounding tolerance must lie in (0, 1/2)");
  }
  const BigReal one(1L, c.digits());
  const BigReal reciprocal = one / c.Abs();
  const BigInt nearest = reciprocal.RoundToInteger();
  const BigReal gap = (reciprocal - BigReal(nearest, c.digits())).Abs();
  // One unit in the last guaranteed digit of the reciprocal.
  const BigReal resolution =
      BigReal(Rat(1), c.digits()) *
      Pow(BigReal(10L, c.digits()),
          reciprocal.Exponent10() - (c.digits() - 1));
  if (nearest == 0 || gap > rounding_tol || resolution >= rounding_tol) {
    throw NotNearInteger(reciprocal, gap);
  }
  PrimePowers powers = TrialDivide(nearest, prime_bound);
  powers.sign = c.sign() < 0 ? -1 : 1;
  return {std::move(powers), reciprocal, gap};
}

PrimePowers FactorizeReciprocal(const BigReal& c, const BigReal& rounding_tol,
                                int prime_bound) {
  return FactorizeReciprocalWithGap(c, rounding_tol, prime_bound).powers;
}

}  // namespace flbessel
