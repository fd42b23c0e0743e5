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

#include "qrl/approx_series.hpp"

namespace qrl {

namespace {

// c_{n+1} = c_n * -(2n-1) / (2(n+1)); at n = 0 this gives c_1 = 1/2.
ExactRational next_coefficient(const ExactRational& c, std::size_t n) {
  const ExactInt numer = ExactInt(1) - ExactInt(2 * n);  // -(2n-1)
  return c * ExactRational(numer, ExactInt(2 * (n + 1)));
}

}  // namespace

ExactRational binomial_coefficient_term(std::size_t n) {
  ExactRational c(1);
  for (std::size_t k = 0; k < n; ++k) c = next_coefficient(c, k);
  return c;
}

SeriesTerm series_term(std::size_t n) {
  ExactRational c = binomial_coefficient_term(n);
  ExactRational contrib = ExactRational(2) * c * ExactRational(ExactInt(1), ExactInt::pow(ExactInt(4), n));
  return {n, std::move(c), std::move(contrib)};
}

ExactRational sqrt5_series_partial(std::size_t n) {
  SeriesPartialSums sums;
  while (sums.index() < n) sums.advance();
  return sums.value();
}

SeriesPartialSums::SeriesPartialSums()
    : term_{0, ExactRational(1), ExactRational(2)}, quarter_pow_(1), sum_(2) {}

void SeriesPartialSums::advance() {
  term_.coefficient = next_coefficient(term_.coefficient, n_);
  ++n_;
  quarter_pow_ *= ExactRational(ExactInt(1), ExactInt(4));
  term_.index = n_;
  term_.contribution = ExactRational(2) * term_.coefficient * quarter_pow_;
  sum_ += term_.contribution;
}

}  // namespace qrl
