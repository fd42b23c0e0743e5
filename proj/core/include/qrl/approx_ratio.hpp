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
 * @file approx_ratio.hpp
 * @brief Term-ratio-difference approximants of Phi and sqrt(5).
 *
 * With a_i the minimal super-increasing sequence and z_i the minimal
 * extra-super-increasing sequence, mu_i = a_i / a_{i-1} and
 * nu_i = z_i / z_{i-1}. The difference nu_i - mu_i approaches the golden
 * ratio conjugate Phi from below, and 2 (nu_i - mu_i) + 1 approaches sqrt(5).
 *
 * A precision demand of d digits means absolute error < 10^-d against the
 * isqrt oracle carried at d + kGuardDigits digits.
 */

#include <cstddef>
#include <optional>

#include "qrl/exact_arith.hpp"
#include "qrl/sequences.hpp"

namespace qrl {

inline constexpr std::size_t kGuardDigits = 10;

/// Claimed n for a 36-digit Phi match; reported next to measured values.
inline constexpr std::size_t kPhiMatchPaperClaim = 40;

struct RatioRecord {
  std::size_t index = 0;
  ExactRational mu;
  ExactRational nu;
  ExactRational diff;
  ExactRational sqrt5_approx;
};

/// All of these throw DomainError for index 0.
ExactRational term_ratio_mu(std::size_t i);
ExactRational term_ratio_nu(std::size_t i);
ExactRational term_ratio_nu(std::size_t i, ExtraSuperCache& cache);
ExactRational ratio_diff(std::size_t i);
ExactRational ratio_diff(std::size_t i, ExtraSuperCache& cache);
ExactRational sqrt5_via_ratio(std::size_t n);
ExactRational sqrt5_via_ratio(std::size_t n, ExtraSuperCache& cache);
RatioRecord ratio_record(std::size_t i, ExtraSuperCache& cache);

enum class ApproxMethod { ratio, series };

const char* to_string(ApproxMethod m);

/// Smallest n >= 1 with |approx(n) - sqrt5| < 10^-target_digits.
/// Throws DomainError for target_digits == 0, LimitError past the cap.
std::size_t find_min_n(ApproxMethod method, std::size_t target_digits,
                       std::size_t guard_digits = kGuardDigits, std::size_t cap = digit_cap());

struct PhiMatch {
  std::size_t precision_digits = 0;
  /// Smallest n with |ratio_diff(n) - Phi| < 10^-precision_digits.
  std::size_t strict_error_n = 0;
  /// Whether ratio_diff(strict_error_n) and Phi share their truncated
  /// precision_digits-digit rendering.
  bool prefix_agrees_at_strict_n = false;
  /// Smallest n whose truncated rendering equals Phi's.
  std::size_t prefix_n = 0;
  std::size_t paper_claim = kPhiMatchPaperClaim;

  friend bool operator==(const PhiMatch&, const PhiMatch&) = default;
};

PhiMatch find_phi_match(std::size_t precision_digits, std::size_t guard_digits = kGuardDigits,
                        std::size_t cap = digit_cap());

/// strict_error_n of find_phi_match.
std::size_t find_phi_match_n(std::size_t precision_digits, std::size_t cap = digit_cap());

}  // namespace qrl
