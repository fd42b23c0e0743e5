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
 * @file sequences.hpp
 * @brief Super-increasing and extra-super-increasing integer sequences.
 *
 * A super-increasing sequence has every term greater than the sum of the
 * terms before it. An extra-super-increasing sequence strengthens that to
 * z_i > sum_{j<i} (i-j) z_j. The minimal variants start at 1 and sit exactly
 * one above the bound at every index. Sequences are 0-indexed.
 */

#include <cstddef>
#include <deque>
#include <iosfwd>
#include <optional>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "qrl/exact_arith.hpp"

namespace qrl {

enum class SequenceKind { generic, super, extra_super, minimal_super, minimal_extra_super };

struct IntSequence {
  std::vector<ExactInt> terms;
  SequenceKind kind = SequenceKind::generic;

  std::size_t size() const { return terms.size(); }
  const ExactInt& operator[](std::size_t i) const { return terms[i]; }
  const ExactInt& back() const { return terms.back(); }
  friend bool operator==(const IntSequence&, const IntSequence&) = default;
};

enum class ViolationReason { none, non_positive_term, sum_inequality_failed };

struct ValidationResult {
  bool valid = true;
  std::optional<std::size_t> first_violation_index;
  ViolationReason reason = ViolationReason::none;

  static ValidationResult ok() { return {}; }
  static ValidationResult fail(std::size_t index, ViolationReason why) { return {false, index, why}; }
};

const char* to_string(ViolationReason reason);

/// Scans left to right and reports the first index that is non-positive or
/// fails a_i > sum_{j<i} a_j. Throws DomainError for an empty sequence.
ValidationResult is_super_increasing(const IntSequence& seq);

/// Same scan against z_i > sum_{j<i} (i-j) z_j.
ValidationResult is_extra_super_increasing(const IntSequence& seq);

/// {a_0..a_n}, a_0 = 1, a_i = 1 + sum_{j<i} a_j.
IntSequence minimal_super(std::size_t n);

/// {z_0..z_n}, z_0 = 1, z_i = 1 + sum_{j<i} (i-j) z_j, evaluated literally
/// (quadratic in n).
IntSequence minimal_extra_super(std::size_t n);

/// Same sequence from z_0 = 1, z_1 = 2, z_i = 3 z_{i-1} - z_{i-2}.
IntSequence minimal_extra_super_fast(std::size_t n);

/// Reads one integer per line. Blank lines and '#' comments are skipped;
/// a leading '+' or '-' is accepted. Throws ParseError with the line number.
IntSequence parse_sequence(std::istream& in, SequenceKind kind = SequenceKind::generic);
IntSequence parse_sequence_text(std::string_view text, SequenceKind kind = SequenceKind::generic);

/// Append-only prefix cache of the minimal extra-super sequence (fast
/// recurrence). Safe for concurrent readers; references returned by term()
/// stay valid for the lifetime of the cache.
class ExtraSuperCache {
 public:
  ExtraSuperCache();

  const ExactInt& term(std::size_t i);
  std::size_t cached() const;

 private:
  mutable std::shared_mutex mu_;
  std::deque<ExactInt> terms_;
};

/// Process-wide cache used by the ratio functions that take no cache.
ExtraSuperCache& shared_extra_super_cache();

}  // namespace qrl
