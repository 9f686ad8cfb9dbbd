// SPDX-License-Identifier: Apache-2.0

#include "sombor/rational.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sombor {

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(Integer(numerator), Integer(denominator)) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  // Boost 1.74 rejects a negative denominator in the two-argument constructor.
  if (denominator < 0) {
    value_ = boost::multiprecision::cpp_rational(Integer(-numerator), Integer(-denominator));
  } else {
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
  }
}

Rational::Integer Rational::numerator() const {
  return boost::multiprecision::numerator(value_);
}

Rational::Integer Rational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

bool Rational::is_integer() const { return denominator() == 1; }

// Round-to-nearest-even on the exact quotient; normal range only, which
// covers every index value this library produces.
double Rational::to_double() const {
  using boost::multiprecision::msb;
  Integer num = numerator();
  const Integer den = denominator();
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  if (negative) num = -num;

  // Scale so the integer quotient has 55 bits: 53 kept, one round bit, one sticky.
  long shift = 54 - (static_cast<long>(msb(num)) - static_cast<long>(msb(den)));
  Integer scaled_num = shift >= 0 ? Integer(num << shift) : num;
  Integer scaled_den = shift >= 0 ? den : Integer(den << -shift);
  Integer quotient = scaled_num / scaled_den;
  Integer remainder = scaled_num - quotient * scaled_den;
  if (msb(quotient) < 54) {
    scaled_num <<= 1;
    ++shift;
    quotient = scaled_num / scaled_den;
    remainder = scaled_num - quotient * scaled_den;
  }
  // quotient has exactly 55 bits; drop two to 53 with correct rounding.
  const unsigned low = static_cast<unsigned>(quotient & 3);
  quotient >>= 2;
  shift -= 2;
  const bool sticky = remainder != 0 || (low & 1) != 0;
  const bool half = (low & 2) != 0;
  if (half && (sticky || (quotient & 1) != 0)) quotient += 1;
  const double mantissa = quotient.convert_to<double>();  // exact: <= 2^53
  const double result = std::ldexp(mantissa, static_cast<int>(-shift));
  return negative ? -result : result;
}

std::string Rational::to_string() const {
  return numerator().str() + "/" + denominator().str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

std::string format_decimal(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("format_decimal: conversion failed");
  return std::string(buf.data(), end);
}

}  // namespace sombor
