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
 * @file approx_series.hpp
 * @brief sqrt(5) = 2 (1 + 1/4)^(1/2) through the binomial series.
 *
 * c_n is the coefficient of x^n in (1 + x)^(1/2):
 *   c_n = (-1)^(n-1) (2n)! / (4^n (n!)^2 (2n-1)),   c_0 = 1.
 * The partial sum S_n = 2 sum_{k<=n} c_k (1/4)^k has a power-of-two
 * denominator, so its decimal expansion terminates.
 */

#include <cstddef>

#include "qrl/exact_arith.hpp"

namespace qrl {

struct SeriesTerm {
  std::size_t index = 0;
  ExactRational coefficient;   ///< c_n
  ExactRational contribution;  ///< 2 c_n (1/4)^n
};

ExactRational binomial_coefficient_term(std::size_t n);

SeriesTerm series_term(std::size_t n);

ExactRational sqrt5_series_partial(std::size_t n);

/// Walks S_0, S_1, ... one term at a time with O(1) big-number work per step.
class SeriesPartialSums {
 public:
  SeriesPartialSums();

  std::size_t index() const { return n_; }
  const ExactRational& value() const { return sum_; }
  const SeriesTerm& last_term() const { return term_; }

  /// Moves to S_{index()+1}.
  void advance();

 private:
  std::size_t n_ = 0;
  SeriesTerm term_;
  ExactRational quarter_pow_;
  ExactRational sum_;
};

}  // namespace qrl
