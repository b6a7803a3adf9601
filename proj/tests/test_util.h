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

#ifndef FLBESSEL_TESTS_TEST_UTIL_H_
#define FLBESSEL_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flbessel/mpnum.h"

namespace flbessel::testing {

inline std::string TestDataPath(const std::string& name) {
  return std::string(FLBESSEL_TESTDATA_DIR) + "/" + name;
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 10^-n as an exact rational.
inline Rat TenToMinus(int n) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(n));
  return Rat(1, p);
}

inline BigReal Tol(int n, int digits = 40) {
  return BigReal(TenToMinus(n), digits);
}

inline BigReal AbsDiff(const BigReal& a, const BigReal& b) {
  return (a - b).Abs();
}

// |a - b| <= 10^-n * max(|b|, floor).
inline bool AgreeRelative(const BigReal& a, const BigReal& b, int n) {
  BigReal scale = b.Abs();
  if (scale.is_zero()) scale = BigReal(1L, b.digits());
  return AbsDiff(a, b) <= scale * TenToMinus(n);
}

// Deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  long Int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(engine_);
  }

  // Rational with numerator in [-num_max, num_max] and denominator in
  // [1, den_max], reduced.
  Rat Rational(long num_max, long den_max) {
    return MakeRat(Int(-num_max, num_max), Int(1, den_max));
  }

 private:
  std::mt19937_64 engine_;
};

// The published tables stored in testdata/reference_values.txt, keyed by
// (label, index) within each section.
class ReferenceValues {
 public:
  static const ReferenceValues& Get() {
    static const ReferenceValues* values =
        new ReferenceValues(TestDataPath("reference_values.txt"));
    return *values;
  }

  // Entries of `section` ("coeff", "power", "primes", "table1") for `label`
  // ("J0", ...; empty for table1), in file order.
  std::vector<std::pair<int, std::string>> Rows(
      const std::string& section, const std::string& label = "") const {
    auto it = rows_.find(section + "/" + label);
    return it == rows_.end() ? std::vector<std::pair<int, std::string>>{}
                             : it->second;
  }

 private:
  explicit ReferenceValues(const std::string& path) {
    std::istringstream in(ReadFile(path));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream fields(line);
      std::string section;
      fields >> section;
      std::string label;
      if (section != "table1") fields >> label;
      int index = 0;
      std::string value;
      fields >> index >> value;
      rows_[section + "/" + label].emplace_back(index, value);
    }
  }

  std::map<std::string, std::vector<std::pair<int, std::string>>> rows_;
};

}  // namespace flbessel::testing

#endif  // FLBESSEL_TESTS_TEST_UTIL_H_
