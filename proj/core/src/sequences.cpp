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

#include "qrl/sequences.hpp"

#include <istream>
#include <mutex>
#include <sstream>
#include <string>

#include "qrl/errors.hpp"

namespace qrl {

const char* to_string(ViolationReason reason) {
  switch (reason) {
    case ViolationReason::none: return "none";
    case ViolationReason::non_positive_term: return "non_positive_term";
    case ViolationReason::sum_inequality_failed: return "sum_inequality_failed";
  }
  return "unknown";
}

ValidationResult is_super_increasing(const IntSequence& seq) {
  if (seq.terms.empty()) throw DomainError("is_super_increasing: empty sequence");
  ExactInt prefix(0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].sign() <= 0) return ValidationResult::fail(i, ViolationReason::non_positive_term);
    if (i > 0 && !(seq[i] > prefix)) return ValidationResult::fail(i, ViolationReason::sum_inequality_failed);
    prefix += seq[i];
  }
  return ValidationResult::ok();
}

ValidationResult is_extra_super_increasing(const IntSequence& seq) {
  if (seq.terms.empty()) throw DomainError("is_extra_super_increasing: empty sequence");
  // weighted_i = sum_{j<i} (i-j) z_j = weighted_{i-1} + sum_{j<i} z_j
  ExactInt plain(0);
  ExactInt weighted(0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].sign() <= 0) return ValidationResult::fail(i, ViolationReason::non_positive_term);
    if (i > 0) {
      weighted += plain;
      if (!(seq[i] > weighted)) return ValidationResult::fail(i, ViolationReason::sum_inequality_failed);
    }
    plain += seq[i];
  }
  return ValidationResult::ok();
}

IntSequence minimal_super(std::size_t n) {
  IntSequence seq{{}, SequenceKind::minimal_super};
  seq.terms.reserve(n + 1);
  ExactInt sum(0);
  for (std::size_t i = 0; i <= n; ++i) {
    ExactInt next = sum + ExactInt(1);
    sum += next;
    seq.terms.push_back(std::move(next));
  }
  return seq;
}

IntSequence minimal_extra_super(std::size_t n) {
  IntSequence seq{{}, SequenceKind::minimal_extra_super};
  seq.terms.reserve(n + 1);
  seq.terms.emplace_back(1);
  for (std::size_t i = 1; i <= n; ++i) {
    ExactInt z(1);
    for (std::size_t j = 0; j < i; ++j) z.add_product(seq.terms[j], i - j);
    seq.terms.push_back(std::move(z));
  }
  return seq;
}

IntSequence minimal_extra_super_fast(std::size_t n) {
  IntSequence seq{{}, SequenceKind::minimal_extra_super};
  seq.terms.reserve(n + 1);
  seq.terms.emplace_back(1);
  if (n >= 1) seq.terms.emplace_back(2);
  for (std::size_t i = 2; i <= n; ++i) {
    ExactInt z(0);
    z.add_product(seq.terms[i - 1], 3);
    z -= seq.terms[i - 2];
    seq.terms.push_back(std::move(z));
  }
  return seq;
}

IntSequence parse_sequence(std::istream& in, SequenceKind kind) {
  IntSequence seq{{}, kind};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      seq.terms.push_back(ExactInt::from_string(std::string_view(line).substr(first, last - first + 1)));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (in.bad()) throw ParseError("read error");
  return seq;
}

IntSequence parse_sequence_text(std::string_view text, SequenceKind kind) {
  std::istringstream in{std::string(text)};
  return parse_sequence(in, kind);
}

// ---------------------------------------------------------- ExtraSuperCache

ExtraSuperCache::ExtraSuperCache() {
  terms_.emplace_back(1);
  terms_.emplace_back(2);
}

const ExactInt& ExtraSuperCache::term(std::size_t i) {
  {
    std::shared_lock lock(mu_);
    if (i < terms_.size()) return terms_[i];
  }
  std::unique_lock lock(mu_);
  while (terms_.size() <= i) {
    const std::size_t k = terms_.size();
    ExactInt z(0);
    z.add_product(terms_[k - 1], 3);
    z -= terms_[k - 2];
    terms_.push_back(std::move(z));
  }
  return terms_[i];
}

std::size_t ExtraSuperCache::cached() const {
  std::shared_lock lock(mu_);
  return terms_.size();
}

ExtraSuperCache& shared_extra_super_cache() {
  static ExtraSuperCache cache;
  return cache;
}

}  // namespace qrl
