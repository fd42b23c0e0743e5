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

#include "qrl/exact_arith.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>

#include "qrl/errors.hpp"

namespace qrl {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

// ---------------------------------------------------------------- ExactInt

ExactInt ExactInt::from_string(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  mpz_class v(std::string(body), 10);
  if (negative) v = -v;
  return ExactInt(std::move(v));
}

ExactInt ExactInt::pow(const ExactInt& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), exponent);
  return ExactInt(std::move(r));
}

ExactInt ExactInt::pow10(std::size_t exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return ExactInt(std::move(r));
}

std::size_t ExactInt::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

std::size_t ExactInt::decimal_digits() const {
  if (is_zero()) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t n = mpz_sizeinbase(v_.get_mpz_t(), 10);
  mpz_class lower;
  mpz_ui_pow_ui(lower.get_mpz_t(), 10, n - 1);
  return mpz_cmpabs(v_.get_mpz_t(), lower.get_mpz_t()) >= 0 ? n : n - 1;
}

unsigned long ExactInt::to_ulong() const {
  if (!fits_ulong()) throw DomainError("integer does not fit an unsigned long: " + to_string());
  return v_.get_ui();
}

ExactInt& ExactInt::add_product(const ExactInt& a, unsigned long b) {
  mpz_addmul_ui(v_.get_mpz_t(), a.v_.get_mpz_t(), b);
  return *this;
}

ExactInt operator/(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw DomainError("integer division by zero");
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return ExactInt(std::move(q));
}

ExactInt operator%(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw DomainError("integer division by zero");
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return ExactInt(std::move(r));
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return ExactInt(std::move(g));
}

std::ostream& operator<<(std::ostream& os, const ExactInt& x) { return os << x.to_string(); }

// ----------------------------------------------------------- ExactRational

ExactRational::ExactRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

ExactRational::ExactRational(const ExactInt& n) : v_(n.gmp()) {}

ExactRational::ExactRational(const ExactInt& num, const ExactInt& den) {
  if (den.is_zero()) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num.gmp(), den.gmp());
  v_.canonicalize();
}

ExactInt ExactRational::num() const { return ExactInt(mpz_class(v_.get_num())); }
ExactInt ExactRational::den() const { return ExactInt(mpz_class(v_.get_den())); }

ExactRational ExactRational::abs() const { return ExactRational(mpq_class(::abs(v_))); }

std::string ExactRational::to_string() const { return v_.get_str(10); }

ExactRational operator+(const ExactRational& a, const ExactRational& b) { return ExactRational(mpq_class(a.v_ + b.v_)); }
ExactRational operator-(const ExactRational& a, const ExactRational& b) { return ExactRational(mpq_class(a.v_ - b.v_)); }
ExactRational operator*(const ExactRational& a, const ExactRational& b) { return ExactRational(mpq_class(a.v_ * b.v_)); }
ExactRational operator-(const ExactRational& a) { return ExactRational(mpq_class(-a.v_)); }

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.is_zero()) throw DomainError("rational division by zero");
  return ExactRational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const ExactRational& q) { return os << q.to_string(); }

// ----------------------------------------------------------- DecimalString

std::string DecimalString::to_string() const {
  std::string out;
  if (sign < 0) out.push_back('-');
  out += int_part;
  if (frac_digits > 0) {
    out.push_back('.');
    out += frac_part;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const DecimalString& d) { return os << d.to_string(); }

// -------------------------------------------------------------- operations

ExactInt int_isqrt(const ExactInt& x) {
  if (x.sign() < 0) throw DomainError("int_isqrt of a negative number");
  if (x.is_zero()) return ExactInt(0);
  // Newton from above: start at 2^ceil(bits/2) >= sqrt(x); iterates decrease
  // strictly until they reach floor(sqrt(x)).
  ExactInt r = ExactInt::pow(ExactInt(2), (x.bit_length() + 1) / 2);
  const ExactInt two(2);
  for (;;) {
    ExactInt next = (r + x / r) / two;
    if (next >= r) return r;
    r = std::move(next);
  }
}

ExactInt int_iroot(const ExactInt& x, unsigned long k) {
  if (k == 0) throw DomainError("int_iroot with k = 0");
  if (x.sign() < 0) throw DomainError("int_iroot of a negative number");
  if (x.is_zero() || k == 1) return x;
  ExactInt r = ExactInt::pow(ExactInt(2), (x.bit_length() + k - 1) / k);
  const ExactInt kk(k);
  const ExactInt km1(k - 1);
  for (;;) {
    ExactInt next = (km1 * r + x / ExactInt::pow(r, k - 1)) / kk;
    if (next >= r) return r;
    r = std::move(next);
  }
}

DecimalString rational_to_decimal(const ExactRational& q, std::size_t digits) {
  const ExactInt scaled = (q.num().abs() * ExactInt::pow10(digits)) / q.den();
  std::string s = scaled.to_string();
  if (s.size() < digits + 1) s.insert(0, digits + 1 - s.size(), '0');

  DecimalString d;
  d.frac_digits = digits;
  d.int_part = s.substr(0, s.size() - digits);
  d.frac_part = s.substr(s.size() - digits);
  d.sign = (q.sign() < 0 && !scaled.is_zero()) ? -1 : 1;
  return d;
}

std::optional<DecimalString> terminating_decimal(const ExactRational& q) {
  mpz_class rest = q.den().gmp();
  const unsigned long twos = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(2).get_mpz_t());
  const unsigned long fives = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (rest != 1) return std::nullopt;
  return rational_to_decimal(q, std::max(twos, fives));
}

DecimalString parse_decimal_string(std::string_view text) {
  std::string_view body = text;
  DecimalString d;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    d.sign = body.front() == '-' ? -1 : 1;
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (!all_digits(int_part) || (dot != std::string_view::npos && !all_digits(frac_part))) {
    throw ParseError("not a decimal number: '" + std::string(text) + "'");
  }
  d.int_part = std::string(int_part);
  d.frac_part = std::string(frac_part);
  d.frac_digits = frac_part.size();
  return d;
}

ExactRational to_rational(const DecimalString& d) {
  ExactInt digits = ExactInt::from_string(d.int_part + d.frac_part);
  if (d.sign < 0) digits = -digits;
  return ExactRational(digits, ExactInt::pow10(d.frac_digits));
}

ExactRational parse_decimal(std::string_view text) { return to_rational(parse_decimal_string(text)); }

std::size_t digit_cap() {
  const char* env = std::getenv("QRL_DIGIT_CAP");
  if (env == nullptr || *env == '\0') return kDefaultDigitCap;
  std::string_view s(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("QRL_DIGIT_CAP must be a non-negative integer, got '" + std::string(s) + "'");
  }
  return value;
}

ExactRational sqrt5_reference_value(std::size_t digits, std::size_t cap) {
  if (digits > cap) {
    throw LimitError("requested " + std::to_string(digits) + " digits, cap is " + std::to_string(cap));
  }
  const ExactInt scale = ExactInt::pow10(digits);
  return ExactRational(int_isqrt(ExactInt(5) * scale * scale), scale);
}

DecimalString sqrt5_reference(std::size_t digits, std::size_t cap) {
  return rational_to_decimal(sqrt5_reference_value(digits, cap), digits);
}

ExactRational abs_error(const ExactRational& a, const ExactRational& b) { return (a - b).abs(); }

ExactRational pow10_inverse(std::size_t d) { return ExactRational(ExactInt(1), ExactInt::pow10(d)); }

std::size_t correct_digits(const ExactRational& e, std::size_t saturate) {
  if (e.is_zero()) return saturate;
  const ExactInt num = e.num().abs();
  const ExactInt den = e.den();
  // |e| < 10^-d  <=>  num * 10^d < den
  auto below = [&](std::size_t d) { return num * ExactInt::pow10(d) < den; };
  const std::size_t dn = num.decimal_digits();
  const std::size_t dd = den.decimal_digits();
  std::size_t d = dd > dn + 1 ? dd - dn - 1 : 0;
  while (d > 0 && !below(d)) --d;
  while (below(d + 1)) ++d;
  return d;
}

}  // namespace qrl
