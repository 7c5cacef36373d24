// Copyright 2026 The qsdbounds Authors
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

#include "qsd/rational.h"

#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qsd {

namespace {

using Int = __int128;

// Exact value num / den with den > 0.
struct Fraction {
  Int num = 0;
  Int den = 1;
};

constexpr Int kLimit = static_cast<Int>(1) << 60;

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  while (b != 0) {
    const Int t = a % b;
    a = b;
    b = t < 0 ? -t : t;
  }
  return a;
}

void reduce(Fraction& f) {
  const Int g = gcd(f.num, f.den);
  if (g > 1) {
    f.num /= g;
    f.den /= g;
  }
}

void scale_checked(Int& v, Int factor, std::string_view text) {
  if (v > kLimit / factor || v < -kLimit / factor) {
    throw std::invalid_argument("number too long for exact parsing: '" + std::string(text) + "'");
  }
  v *= factor;
}

Fraction parse_decimal(std::string_view s, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
  Fraction f;
  bool digits = false;
  for (; pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])); ++pos) {
    scale_checked(f.num, 10, whole);
    f.num += s[pos] - '0';
    digits = true;
  }
  if (pos < s.size() && s[pos] == '.') {
    for (++pos; pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])); ++pos) {
      scale_checked(f.num, 10, whole);
      f.num += s[pos] - '0';
      scale_checked(f.den, 10, whole);
      digits = true;
    }
  }
  if (!digits) throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool neg_exp = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg_exp = s[pos++] == '-';
    int exp = 0;
    bool exp_digits = false;
    for (; pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])); ++pos) {
      exp = exp * 10 + (s[pos] - '0');
      exp_digits = true;
      if (exp > 30) throw std::invalid_argument("exponent too large in '" + std::string(whole) + "'");
    }
    if (!exp_digits) throw std::invalid_argument("malformed exponent in '" + std::string(whole) + "'");
    for (int k = 0; k < exp; ++k) scale_checked(neg_exp ? f.den : f.num, 10, whole);
  }
  if (pos != s.size()) throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  if (negative) f.num = -f.num;
  reduce(f);
  return f;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double to_double(Fraction f) {
  constexpr Int kExact = static_cast<Int>(1) << 53;
  const Int abs_num = f.num < 0 ? -f.num : f.num;
  if (abs_num <= kExact && f.den <= kExact) {
    // Both operands are exact doubles, so IEEE division rounds once.
    return static_cast<double>(f.num) / static_cast<double>(f.den);
  }
  return static_cast<double>(static_cast<long double>(f.num) / static_cast<long double>(f.den));
}

}  // namespace

double parse_exact_real(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  Fraction f = parse_decimal(trim(s.substr(0, slash)), text);
  if (slash != std::string_view::npos) {
    const Fraction d = parse_decimal(trim(s.substr(slash + 1)), text);
    if (d.num == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Fraction q{f.num * d.den, f.den * d.num};
    if (q.den < 0) {
      q.num = -q.num;
      q.den = -q.den;
    }
    reduce(q);
    f = q;
  }
  return to_double(f);
}

}  // namespace qsd
