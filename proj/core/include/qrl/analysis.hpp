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
 * @file analysis.hpp
 * @brief Side-by-side convergence report for the two sqrt(5) approximants.
 *
 * For n = 1..n_max both the binomial-series partial sum and the
 * term-ratio-difference approximant are compared with the isqrt oracle at
 * ref_digits digits. All numbers leave this module as decimal strings.
 */

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qrl/approx_ratio.hpp"
#include "qrl/exact_arith.hpp"

namespace qrl {

struct ConvergenceRecord {
  std::size_t n = 0;
  DecimalString approx;
  DecimalString abs_error;
  int error_sign = 0;
  /// Largest d with |error| < 10^-d, floor 0, saturating at ref_digits.
  std::size_t correct_digits = 0;

  friend bool operator==(const ConvergenceRecord&, const ConvergenceRecord&) = default;
};

struct FirstN {
  std::size_t series = 0;
  std::size_t ratio = 0;
  friend bool operator==(const FirstN&, const FirstN&) = default;
};

struct ComparisonReport {
  std::size_t n_max = 0;
  std::size_t ref_digits = 0;
  std::vector<ConvergenceRecord> series_records;
  std::vector<ConvergenceRecord> ratio_records;
  /// Geometric mean of e_{n+1}/e_n over the back half of the sweep.
  DecimalString series_rate_estimate;
  DecimalString ratio_rate_estimate;
  /// Same estimate for the 13/8 + sum phi series against the phi oracle.
  DecimalString phi_series_rate_estimate;
  std::map<std::size_t, FirstN> first_n_to_reach;
  PhiMatch phi_match;
};

bool operator==(const ComparisonReport& a, const ComparisonReport& b);

inline constexpr std::size_t kRateDigits = 6;
inline constexpr std::size_t kDefaultPhiMatchDigits = 36;

/// Requires n_max >= 2 and ref_digits >= max(digit_targets) + kGuardDigits
/// (DomainError otherwise); ref_digits past the cap raises LimitError.
ComparisonReport build_comparison(std::size_t n_max, std::size_t ref_digits,
                                  const std::vector<std::size_t>& digit_targets,
                                  std::size_t phi_match_digits = kDefaultPhiMatchDigits,
                                  std::size_t cap = digit_cap());

/// (e_last / e_first)^(1/steps) truncated to kRateDigits; "0" when e_first is zero.
DecimalString geometric_rate(const ExactRational& e_first, const ExactRational& e_last, std::size_t steps);

enum class ReportFormat { csv, json, table };

ReportFormat parse_report_format(std::string_view name);

inline constexpr std::string_view kCsvHeader = "method,n,approx,abs_error,error_sign,correct_digits";

/// Deterministic serialization; identical reports give identical bytes.
std::string emit_report(const ComparisonReport& report, ReportFormat format);

/// Inverse of emit_report(..., ReportFormat::json). Throws ParseError.
ComparisonReport parse_report_json(std::string_view json);

}  // namespace qrl
