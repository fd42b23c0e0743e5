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

#include "qrl/golden.hpp"

namespace qrl {

PhiApproximant phi_continued_fraction(std::size_t depth) {
  // All partial quotients are 1, so p_k = p_{k-1} + p_{k-2} and likewise q_k.
  ExactInt p_prev(1), q_prev(0);
  ExactInt p(1), q(1);
  for (std::size_t k = 1; k <= depth; ++k) {
    ExactInt p_next = p + p_prev;
    ExactInt q_next = q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return {ExactRational(p, q), PhiMethod::continued_fraction, depth};
}

PhiApproximant phi_series_partial(std::size_t terms) {
  ExactRational sum(ExactInt(13), ExactInt(8));
  // t_0 = -1/128; t_{n+1} / t_n = -(2n+3) / (8(n+3))
  ExactRational t(ExactInt(-1), ExactInt(128));
  for (std::size_t n = 0; n < terms; ++n) {
    sum += t;
    t *= ExactRational(-ExactInt(2 * n + 3), ExactInt(8 * (n + 3)));
  }
  return {sum, PhiMethod::series, terms};
}

PhiApproximant phi_from_sqrt5_oracle(std::size_t digits, std::size_t cap) {
  ExactRational phi = (sqrt5_reference_value(digits, cap) + ExactRational(1)) / ExactRational(2);
  return {phi, PhiMethod::from_sqrt5_oracle, digits};
}

ExactRational phi_conjugate(const ExactRational& phi) { return phi - ExactRational(1); }

ExactRational quadratic_residual(const ExactRational& q) { return q * q + q - ExactRational(1); }

ExactRational sqrt5_from_phi_conjugate(const ExactRational& big_phi) {
  return ExactRational(2) * big_phi + ExactRational(1);
}

}  // namespace qrl
