// Copyright 2026 The schoolchoice Authors
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

#ifndef SCHOOLCHOICE_RATIONAL_H_
#define SCHOOLCHOICE_RATIONAL_H_

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace schoolchoice {

// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

// Parses "p/q", an integer, or a decimal literal such as "0.65", "-1.5e-3".
// Decimal literals are converted exactly (0.3 becomes 3/10).
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational ParseRational(std::string_view text);

// num/den in lowest terms. Prefer this to Rational(num, den), which keeps
// the pair as given and breaks equality tests.
Rational Fraction(long num, long den);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string ToString(const Rational& value);

double ToDouble(const Rational& value);

// Exact binary value of a finite double.
Rational RationalFromDouble(double value);

// Shortest decimal that round-trips `value`, parsed exactly. This is what a
// human writing 0.3 in a JSON file means.
Rational RationalFromDecimalDouble(double value);

// A probability or utility that is exact whenever every input on its
// computation path was exact, and a double otherwise. Mixing an exact and a
// real operand yields a real result.
class Number {
 public:
  Number() : value_(Rational(0)) {}
  Number(Rational value) : value_(std::move(value)) {}  // NOLINT
  Number(int value) : value_(Rational(value)) {}         // NOLINT

  static Number Real(double value) { return Number(RealTag{}, value); }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }

  // Requires is_exact().
  const Rational& exact() const;
  double ToDouble() const;

  // "p/q" for exact values, 12 significant digits otherwise.
  std::string ToString() const;

  friend Number operator+(const Number& a, const Number& b);
  friend Number operator-(const Number& a, const Number& b);
  friend Number operator*(const Number& a, const Number& b);
  friend Number operator/(const Number& a, const Number& b);
  Number& operator+=(const Number& other) { return *this = *this + other; }
  Number& operator*=(const Number& other) { return *this = *this * other; }

  // Exact comparison when both sides are exact.
  friend int Compare(const Number& a, const Number& b);
  friend bool operator==(const Number& a, const Number& b) {
    return Compare(a, b) == 0;
  }
  friend bool operator<(const Number& a, const Number& b) {
    return Compare(a, b) < 0;
  }
  friend bool operator>(const Number& a, const Number& b) {
    return Compare(a, b) > 0;
  }
  friend bool operator<=(const Number& a, const Number& b) {
    return Compare(a, b) <= 0;
  }
  friend bool operator>=(const Number& a, const Number& b) {
    return Compare(a, b) >= 0;
  }

 private:
  struct RealTag {};
  Number(RealTag, double value) : value_(value) {}

  std::variant<Rational, double> value_;
};

std::ostream& operator<<(std::ostream& os, const Number& value);

}  // namespace schoolchoice

#endif  // SCHOOLCHOICE_RATIONAL_H_
