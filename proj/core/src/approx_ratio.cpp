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

#include "qrl/approx_ratio.hpp"

#include <string>

#include "qrl/approx_series.hpp"
#include "qrl/errors.hpp"

namespace qrl {

namespace {

void require_positive_index(std::size_t i, const char* what) {
  if (i == 0) throw DomainError(std::string(what) + ": index must be >= 1");
}

void require_within_cap(std::size_t digits, std::size_t guard, std::size_t cap) {
  if (digits > cap || digits + guard > cap) {
    throw LimitError("precision " + std::to_string(digits) + " (+" + std::to_string(guard) +
                     " guard) exceeds digit cap " + std::to_string(cap));
  }
}

}  // namespace

ExactRational term_ratio_mu(std::size_t i) {
  require_positive_index(i, "term_ratio_mu");
  const IntSequence a = minimal_super(i);
  return ExactRational(a[i], a[i - 1]);
}

ExactRational term_ratio_nu(std::size_t i, ExtraSuperCache& cache) {
  require_positive_index(i, "term_ratio_nu");
  const ExactInt& prev = cache.term(i - 1);
  const ExactInt& cur = cache.term(i);
  return ExactRational(cur, prev);
}

ExactRational term_ratio_nu(std::size_t i) { return term_ratio_nu(i, shared_extra_super_cache()); }

ExactRational ratio_diff(std::size_t i, ExtraSuperCache& cache) {
  require_positive_index(i, "ratio_diff");
  // mu_i is identically 2 (a_i = 2^i); term_ratio_mu verifies that route.
  return term_ratio_nu(i, cache) - ExactRational(2);
}

ExactRational ratio_diff(std::size_t i) { return ratio_diff(i, shared_extra_super_cache()); }

ExactRational sqrt5_via_ratio(std::size_t n, ExtraSuperCache& cache) {
  require_positive_index(n, "sqrt5_via_ratio");
  return ExactRational(2) * ratio_diff(n, cache) + ExactRational(1);
}

ExactRational sqrt5_via_ratio(std::size_t n) { return sqrt5_via_ratio(n, shared_extra_super_cache()); }

RatioRecord ratio_record(std::size_t i, ExtraSuperCache& cache) {
  require_positive_index(i, "ratio_record");
  RatioRecord r;
  r.index = i;
  r.mu = ExactRational(2);
  r.nu = term_ratio_nu(i, cache);
  r.diff = r.nu - r.mu;
  r.sqrt5_approx = ExactRational(2) * r.diff + ExactRational(1);
  return r;
}

const char* to_string(ApproxMethod m) { return m == ApproxMethod::ratio ? "ratio" : "series"; }

std::size_t find_min_n(ApproxMethod method, std::size_t target_digits, std::size_t guard_digits,
                       std::size_t cap) {
  if (target_digits == 0) throw DomainError("find_min_n: target_digits must be >= 1");
  require_within_cap(target_digits, guard_digits, cap);

  const ExactRational sqrt5 = sqrt5_reference_value(target_digits + guard_digits, cap);
  const ExactRational threshold = pow10_inverse(target_digits);

  // Both methods have strictly decreasing absolute error from n = 1, so the
  // first hit is the minimum.
  if (method == ApproxMethod::series) {
    SeriesPartialSums sums;
    for (;;) {
      sums.advance();
      if (abs_error(sums.value(), sqrt5) < threshold) return sums.index();
    }
  }
  ExtraSuperCache cache;
  for (std::size_t n = 1;; ++n) {
    if (abs_error(sqrt5_via_ratio(n, cache), sqrt5) < threshold) return n;
  }
}

PhiMatch find_phi_match(std::size_t precision_digits, std::size_t guard_digits, std::size_t cap) {
  if (precision_digits == 0) throw DomainError("find_phi_match: precision must be >= 1");
  require_within_cap(precision_digits, guard_digits, cap);

  const ExactRational sqrt5 = sqrt5_reference_value(precision_digits + guard_digits, cap);
  const ExactRational big_phi = (sqrt5 - ExactRational(1)) / ExactRational(2);
  const ExactRational threshold = pow10_inverse(precision_digits);
  const DecimalString phi_prefix = rational_to_decimal(big_phi, precision_digits);

  PhiMatch m;
  m.precision_digits = precision_digits;
  ExtraSuperCache cache;
  // diff_n rises monotonically toward Phi from below, so once its rendering
  // matches Phi's it keeps matching and both searches terminate.
  for (std::size_t n = 1; m.strict_error_n == 0 || m.prefix_n == 0; ++n) {
    const ExactRational diff = ratio_diff(n, cache);
    const bool prefix = rational_to_decimal(diff, precision_digits) == phi_prefix;
    if (m.prefix_n == 0 && prefix) m.prefix_n = n;
    if (m.strict_error_n == 0 && abs_error(diff, big_phi) < threshold) {
      m.strict_error_n = n;
      m.prefix_agrees_at_strict_n = prefix;
    }
  }
  return m;
}

std::size_t find_phi_match_n(std::size_t precision_digits, std::size_t cap) {
  return find_phi_match(precision_digits, kGuardDigits, cap).strict_error_n;
}

}  // namespace qrl
