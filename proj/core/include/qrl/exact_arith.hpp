/*
 * Copyright 2026 The qrl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

/**
 * @file exact_arith.hpp
 * @brief Unbounded integers, exact rationals and truncated decimal rendering.
 *
 * ExactInt and ExactRational are thin value types over GMP. Every rational
 * is kept in lowest terms with a strictly positive denominator, so equality
 * is structural and num()/den() are canonical.
 *
 * Decimal output always truncates toward zero; nothing in this library
 * rounds.
 */

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qrl {

class ExactRational;

class ExactInt {
 public:
  ExactInt() = default;

  template <std::signed_integral T>
  ExactInt(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  ExactInt(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  explicit ExactInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed ('+' or '-') run of decimal digits.
  static ExactInt from_string(std::string_view text);

  static ExactInt pow(const ExactInt& base, unsigned long exponent);
  static ExactInt pow10(std::size_t exponent);

  std::string to_string() const { return v_.get_str(10); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  ExactInt abs() const { return ExactInt(mpz_class(::abs(v_))); }

  /// Number of bits in |x|; 0 for zero.
  std::size_t bit_length() const;
  /// Exact count of decimal digits in |x|; 1 for zero.
  std::size_t decimal_digits() const;

  bool fits_ulong() const { return v_.fits_ulong_p(); }
  unsigned long to_ulong() const;

  /// this += a * b
  ExactInt& add_product(const ExactInt& a, unsigned long b);

  ExactInt& operator+=(const ExactInt& o) { v_ += o.v_; return *this; }
  ExactInt& operator-=(const ExactInt& o) { v_ -= o.v_; return *this; }
  ExactInt& operator*=(const ExactInt& o) { v_ *= o.v_; return *this; }

  friend ExactInt operator+(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.v_ + b.v_)); }
  friend ExactInt operator-(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.v_ - b.v_)); }
  friend ExactInt operator*(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.v_ * b.v_)); }
  friend ExactInt operator-(const ExactInt& a) { return ExactInt(mpz_class(-a.v_)); }
  /// Quotient truncated toward zero. Throws DomainError on a zero divisor.
  friend ExactInt operator/(const ExactInt& a, const ExactInt& b);
  /// Remainder with the sign of the dividend.
  friend ExactInt operator%(const ExactInt& a, const ExactInt& b);

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend ExactInt gcd(const ExactInt& a, const ExactInt& b);

  const mpz_class& gmp() const { return v_; }

 private:
  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const ExactInt& x);

class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(const ExactInt& n);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  ExactRational(T n) : ExactRational(ExactInt(n)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError if den is zero. The result is reduced.
  ExactRational(const ExactInt& num, const ExactInt& den);

  ExactInt num() const;
  ExactInt den() const;

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  ExactRational abs() const;

  /// "n/d", or "n" when the denominator is 1.
  std::string to_string() const;

  ExactRational& operator+=(const ExactRational& o) { v_ += o.v_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { v_ -= o.v_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { v_ *= o.v_; return *this; }

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
  /// Throws DomainError when dividing by zero.
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a);

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  const mpq_class& gmp() const { return v_; }

 private:
  explicit ExactRational(mpq_class v);
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& q);

/// Truncated decimal rendering of a rational.
///
/// frac_part always holds exactly frac_digits characters. A value whose
/// truncation is zero is rendered without a minus sign.
struct DecimalString {
  int sign = 1;
  std::string int_part = "0";
  std::string frac_part;
  std::size_t frac_digits = 0;

  std::string to_string() const;

  friend bool operator==(const DecimalString&, const DecimalString&) = default;
};

std::ostream& operator<<(std::ostream& os, const DecimalString& d);

/// floor(sqrt(x)). Throws DomainError for negative x.
ExactInt int_isqrt(const ExactInt& x);

/// floor(x^(1/k)) for x >= 0, k >= 1.
ExactInt int_iroot(const ExactInt& x, unsigned long k);

DecimalString rational_to_decimal(const ExactRational& q, std::size_t digits);

/// Full expansion when the denominator has no prime factors besides 2 and 5.
std::optional<DecimalString> terminating_decimal(const ExactRational& q);

/// Parses "[+-]int[.frac]" back to an exact rational.
ExactRational parse_decimal(std::string_view text);
/// Parses a rendered decimal keeping its digit count.
DecimalString parse_decimal_string(std::string_view text);
ExactRational to_rational(const DecimalString& d);

/// Default precision cap, overridable through QRL_DIGIT_CAP.
inline constexpr std::size_t kDefaultDigitCap = 100'000;

/// Active digit cap: QRL_DIGIT_CAP when set, else kDefaultDigitCap.
/// Throws DomainError when the variable is not a non-negative integer.
std::size_t digit_cap();

/// sqrt(5) truncated to `digits` fractional digits, from
/// int_isqrt(5 * 10^(2*digits)). Throws LimitError when digits > cap.
DecimalString sqrt5_reference(std::size_t digits, std::size_t cap = digit_cap());

/// Same oracle as an exact rational with denominator 10^digits.
ExactRational sqrt5_reference_value(std::size_t digits, std::size_t cap = digit_cap());

ExactRational abs_error(const ExactRational& a, const ExactRational& b);

/// Largest d with |e| < 10^-d, floor 0. A zero error reports `saturate`.
std::size_t correct_digits(const ExactRational& e, std::size_t saturate);

/// 10^-d as an exact rational.
ExactRational pow10_inverse(std::size_t d);

}  // namespace qrl
