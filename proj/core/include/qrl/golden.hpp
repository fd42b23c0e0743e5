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

// Golden ratio phi = (1 + sqrt 5) / 2 and its conjugate Phi = phi - 1.

#include <cstddef>

#include "qrl/exact_arith.hpp"

namespace qrl {

enum class PhiMethod { continued_fraction, series, from_sqrt5_oracle };

struct PhiApproximant {
  ExactRational value;
  PhiMethod method = PhiMethod::continued_fraction;
  std::size_t depth_or_terms = 0;
};

/// depth-th convergent of [1; 1, 1, ...]. Depth 0 is 1/1, depth 1 is 2/1.
PhiApproximant phi_continued_fraction(std::size_t depth);

/// 13/8 + sum_{n<terms} (-1)^(n+1) (2n+1)! / (4^(2n+3) n! (n+2)!).
PhiApproximant phi_series_partial(std::size_t terms);

/// (sqrt5_reference(digits) + 1) / 2.
PhiApproximant phi_from_sqrt5_oracle(std::size_t digits, std::size_t cap = digit_cap());

/// phi - 1
ExactRational phi_conjugate(const ExactRational& phi);

/// q^2 + q - 1; zero exactly at the conjugate.
ExactRational quadratic_residual(const ExactRational& q);

/// 2 Phi + 1
ExactRational sqrt5_from_phi_conjugate(const ExactRational& big_phi);

}  // namespace qrl
