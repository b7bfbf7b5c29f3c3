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

#include "schoolchoice/rational.h"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace schoolchoice {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void Malformed(std::string_view text) {
  throw std::invalid_argument("malformed rational \"" + std::string(text) +
                              "\"");
}

mpz_class PowerOfTen(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

Rational ParseDecimal(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!AllDigits(exp_part) || exp_part.size() > 6) Malformed(original);
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) Malformed(original);
    if ((!whole.empty() && !AllDigits(whole)) ||
        (!frac.empty() && !AllDigits(frac))) {
      Malformed(original);
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!AllDigits(text)) Malformed(original);
    digits = std::string(text);
  }
  Rational value(mpz_class(digits, 10));
  if (exponent > 0) {
    value *= PowerOfTen(static_cast<unsigned long>(exponent));
  } else if (exponent < 0) {
    value /= PowerOfTen(static_cast<unsigned long>(-exponent));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) Malformed(original);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!AllDigits(num) || !AllDigits(den)) Malformed(original);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
      throw std::invalid_argument("zero denominator in \"" +
                                  std::string(original) + "\"");
    }
    Rational value(mpz_class(std::string(num), 10), d);
    value.canonicalize();
    return negative ? Rational(-value) : value;
  }
  return ParseDecimal(text, original);
}

Rational Fraction(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string ToString(const Rational& value) {
  Rational copy(value);
  copy.canonicalize();
  return copy.get_str();
}

double ToDouble(const Rational& value) { return value.get_d(); }

Rational RationalFromDouble(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("non-finite value has no rational form");
  }
  return Rational(value);
}

Rational RationalFromDecimalDouble(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("non-finite value has no rational form");
  }
  std::array<char, 64> buffer{};
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(),
                                 value);
  if (ec != std::errc()) return RationalFromDouble(value);
  return ParseRational(std::string_view(buffer.data(), end - buffer.data()));
}

const Rational& Number::exact() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw std::logic_error("Number::exact() called on a real value");
}

double Number::ToDouble() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->get_d();
  return std::get<double>(value_);
}

std::string Number::ToString() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->get_str();
  std::array<char, 64> buffer{};
  std::snprintf(buffer.data(), buffer.size(), "%.12g",
                std::get<double>(value_));
  return buffer.data();
}

Number operator+(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Rational(a.exact() + b.exact());
  return Number::Real(a.ToDouble() + b.ToDouble());
}

Number operator-(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Rational(a.exact() - b.exact());
  return Number::Real(a.ToDouble() - b.ToDouble());
}

Number operator*(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Rational(a.exact() * b.exact());
  return Number::Real(a.ToDouble() * b.ToDouble());
}

Number operator/(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) {
    if (b.exact() == 0) throw std::domain_error("division by zero");
    return Rational(a.exact() / b.exact());
  }
  return Number::Real(a.ToDouble() / b.ToDouble());
}

int Compare(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) {
    int c = cmp(a.exact(), b.exact());
    return (c > 0) - (c < 0);
  }
  double x = a.ToDouble();
  double y = b.ToDouble();
  return (x > y) - (x < y);
}

std::ostream& operator<<(std::ostream& os, const Number& value) {
  return os << value.ToString();
}

}  // namespace schoolchoice
