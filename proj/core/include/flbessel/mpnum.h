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

// Exact and arbitrary-precision arithmetic.
//
// BigInt and Rat are GMP's C++ classes. BigReal is an MPFR value tagged with
// the number of significant decimal digits it is meant to carry; every
// binary operation produces a result at the larger of its operands' digit
// counts. All operations are pure and deterministic for a given precision.

#ifndef FLBESSEL_MPNUM_H_
#define FLBESSEL_MPNUM_H_

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flbessel {

using BigInt = mpz_class;
using Rat = mpq_class;

// Extra decimal digits carried internally beyond a requested precision.
inline constexpr int kGuardDigits = 16;
inline constexpr int kDefaultDigits = 50;
inline constexpr int kDefaultPrimeBound = 19;

// Base class of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematically undefined request: division by zero, a gamma pole,
// factorizing zero, a negative Pochhammer length.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed decimal or rational text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// num/den in lowest terms. Throws DomainError when den == 0.
Rat MakeRat(const BigInt& num, const BigInt& den);

// Accepts "p/q", or decimal text with optional sign, fraction and exponent
// ("-0.125", "3.75e2"). Decimal input converts exactly.
Rat ParseRat(std::string_view text);

// Always "num/den", e.g. "1/1", "-3/2".
std::string RatToString(const Rat& value);

// Binary precision that holds `digits` significant decimal digits such that
// decimal -> binary -> decimal at `digits` is the identity.
mpfr_prec_t DigitsToBits(int digits);

class BigReal {
 public:
  // Decimal form: value = (negative ? -1 : 1) * d.ddd... * 10^exponent10.
  struct Decimal {
    bool negative = false;
    std::string digits;
    long exponent10 = 0;
  };

  BigReal() : BigReal(kDefaultDigits) {}
  explicit BigReal(int digits);
  BigReal(long value, int digits);
  BigReal(const BigInt& value, int digits);
  BigReal(const Rat& value, int digits);

  // Grammar: [+-] digits ['.' digits] [(e|E) [+-] digits], at least one
  // mantissa digit. The single-argument form uses the count of significant
  // mantissa digits (at least 1) as the precision.
  static BigReal Parse(std::string_view text, int digits);
  static BigReal Parse(std::string_view text);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  int digits() const { return digits_; }
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  // Same value rounded (nearest, ties to even) to `digits` digits.
  BigReal Rounded(int digits) const;
  BigReal Abs() const;

  // floor(log10|x|) of the value as rendered at its own precision.
  // Throws DomainError for zero.
  long Exponent10() const;

  Decimal ToDecimal(int sig_digits) const;

  // Exactly `sig_digits` significant digits (default: digits()). Fixed
  // notation when the decimal exponent lies in [-5, 20], otherwise
  // d.ddde[+-]x. Zero renders as "0".
  std::string ToString() const { return ToString(digits_); }
  std::string ToString(int sig_digits) const;

  // Nearest integer, ties to even.
  BigInt RoundToInteger() const;
  double ToDouble() const { return mpfr_get_d(value_, MPFR_RNDN); }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(const Rat& rhs);
  BigReal& operator/=(const Rat& rhs);
  BigReal& operator+=(const Rat& rhs);

  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
  friend BigReal operator*(BigReal lhs, const Rat& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const Rat& rhs) { return lhs /= rhs; }
  friend BigReal operator+(BigReal lhs, const Rat& rhs) { return lhs += rhs; }
  BigReal operator-() const;

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a,
                                           const BigReal& b) {
    const int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater
                          : std::partial_ordering::equivalent);
  }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  void Widen(int digits);

  mpfr_t value_;
  int digits_;
};

BigReal Sqrt(const BigReal& x);
// x^n for integer n (n may be negative).
BigReal Pow(const BigReal& x, long n);

// sqrt(pi) correct to `digits` digits.
BigReal SqrtPi(int digits);

// Gamma(twice_arg / 2) for a positive integer or half-integer argument as an
// exact rational, optionally times sqrt(pi).
struct HalfIntGamma {
  Rat rational;
  bool times_sqrt_pi = false;
};
HalfIntGamma GammaHalfIntExact(long twice_arg);

// Gamma(twice_arg / 2) rendered at `digits`. Throws DomainError for
// twice_arg <= 0.
BigReal GammaHalfInt(long twice_arg, int digits);

// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
Rat Pochhammer(const Rat& a, long n);
// (-a)_n computed as (-1)^n (a-n+1)_n.
Rat PochhammerReflect(const Rat& a, long n);

BigInt Factorial(long n);
// Zero when r < 0 or r > n.
BigInt Binomial(long n, long r);

std::vector<unsigned long> PrimesUpTo(int bound);

// sign * leftover * prod p^e, leftover free of primes <= the bound used.
struct PrimePowers {
  int sign = 1;
  std::map<unsigned long, unsigned long> exponents;  // nonzero entries only
  BigInt leftover = 1;

  unsigned long exponent(unsigned long prime) const;
  BigInt Reconstruct() const;
  // "2^30*3^4*5^2*7^2"; bare primes for exponent 1; "1" when empty.
  std::string ToString() const;
  friend bool operator==(const PrimePowers&, const PrimePowers&) = default;
};

// Trial division of |n| by the primes <= prime_bound.
PrimePowers TrialDivide(const BigInt& n, int prime_bound = kDefaultPrimeBound);

// Reciprocal of a coefficient was not within tolerance of an integer.
class NotNearInteger : public Error {
 public:
  NotNearInteger(const BigReal& reciprocal, const BigReal& gap);
  const BigReal& reciprocal() const { return reciprocal_; }
  const BigReal& gap() const { return gap_; }

 private:
  BigReal reciprocal_;
  BigReal gap_;
};

// r = 1/|c| is rounded to the nearest integer R and factored over the primes
// <= prime_bound. `rounding_tol` (in (0, 1/2)) bounds the fractional gap
// |r - R|; a larger gap, R == 0, or a value whose precision cannot resolve
// the gap raises NotNearInteger. A leftover > 1 is reported, not an error.
PrimePowers FactorizeReciprocal(const BigReal& c, const BigReal& rounding_tol,
                                int prime_bound = kDefaultPrimeBound);

// Same as FactorizeReciprocal, also returning the gap |r - R|.
struct ReciprocalFactorization {
  PrimePowers powers;
  BigReal reciprocal;
  BigReal gap;
};
ReciprocalFactorization FactorizeReciprocalWithGap(
    const BigReal& c, const BigReal& rounding_tol,
    int prime_bound = kDefaultPrimeBound);

}  // namespace flbessel

#endif  // FLBESSEL_MPNUM_H_
