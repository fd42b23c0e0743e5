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

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace qrl {
namespace {

constexpr const char* kPhi36 = "1.618033988749894848204586834365638117";
constexpr const char* kConj36 = "0.618033988749894848204586834365638117";

ExactRational Q(long n, long d) { return ExactRational(ExactInt(n), ExactInt(d)); }

ExactRational phi_oracle(std::size_t digits) { return phi_from_sqrt5_oracle(digits).value; }

TEST(PhiContinuedFractionTest, FirstConvergents) {
  EXPECT_EQ(phi_continued_fraction(0).value, ExactRational(1));
  EXPECT_EQ(phi_continued_fraction(1).value, ExactRational(2));
  EXPECT_EQ(phi_continued_fraction(2).value, Q(3, 2));
  EXPECT_EQ(phi_continued_fraction(3).value, Q(5, 3));
  EXPECT_EQ(phi_continued_fraction(3).method, PhiMethod::continued_fraction);
  EXPECT_EQ(phi_continued_fraction(3).depth_or_terms, 3u);
}

TEST(PhiContinuedFractionTest, MatchesNestedEvaluation) {
  for (std::size_t k = 0; k <= 20; ++k) {
    ASSERT_EQ(phi_continued_fraction(k).value, testing::nested_continued_fraction(k)) << k;
  }
}

TEST(PhiContinuedFractionTest, ConvergentsAreFibonacciRatios) {
  for (unsigned long k = 0; k <= 60; ++k) {
    const ExactRational c = phi_continued_fraction(k).value;
    ASSERT_EQ(c.num(), testing::fibonacci(k + 2));
    ASSERT_EQ(c.den(), testing::fibonacci(k + 1));
  }
}

TEST(PhiContinuedFractionTest, ThirtySixDigitValue) {
  const ExactRational c = phi_continued_fraction(180).value;
  EXPECT_EQ(rational_to_decimal(c, 36).to_string(), kPhi36);
  EXPECT_EQ(rational_to_decimal(phi_oracle(46), 36).to_string(), kPhi36);
}

TEST(PhiContinuedFractionTest, AlternatesAroundOracleWithShrinkingError) {
  const ExactRational phi = phi_oracle(120);
  ExactRational prev_err = ExactRational(10);
  for (std::size_t k = 0; k <= 100; ++k) {
    const ExactRational diff = phi_continued_fraction(k).value - phi;
    ASSERT_EQ(diff.sign(), k % 2 == 0 ? -1 : 1) << k;
    ASSERT_LT(diff.abs(), prev_err) << k;
    prev_err = diff.abs();
  }
}

TEST(PhiContinuedFractionTest, GoldenIdentityResidualShrinks) {
  // |1 + 1/phi_k - phi_k| strictly decreases from k = 1
  ExactRational prev;
  for (std::size_t k = 1; k <= 80; ++k) {
    const ExactRational p = phi_continued_fraction(k).value;
    const ExactRational r = (ExactRational(1) + ExactRational(1) / p - p).abs();
    if (k > 1) ASSERT_LT(r, prev) << k;
    prev = r;
  }
}

TEST(PhiSeriesTest, SmallTermCounts) {
  EXPECT_EQ(phi_series_partial(0).value, Q(13, 8));
  EXPECT_EQ(phi_series_partial(1).value, Q(207, 128));
  EXPECT_EQ(rational_to_decimal(phi_series_partial(1).value, 7).to_string(), "1.6171875");
  EXPECT_EQ(phi_series_partial(4).method, PhiMethod::series);
}

TEST(PhiSeriesTest, IncrementalTermsMatchFactorialFormula) {
  ExactRational sum = Q(13, 8);
  for (unsigned long n = 0; n < 50; ++n) {
    sum += testing::phi_series_term_by_factorials(n);
    ASSERT_EQ(phi_series_partial(n + 1).value, sum) << n;
  }
}

TEST(PhiSeriesTest, ThirtySixDigitValue) {
  EXPECT_EQ(rational_to_decimal(phi_series_partial(65).value, 36).to_string(), kPhi36);
}

TEST(PhiSeriesTest, ErrorsAlternateAndShrink) {
  const ExactRational phi = phi_oracle(200);
  ExactRational prev_err = ExactRational(10);
  for (std::size_t t = 0; t <= 120; ++t) {
    const ExactRational diff = phi_series_partial(t).value - phi;
    ASSERT_EQ(diff.sign(), t % 2 == 0 ? 1 : -1) << t;
    ASSERT_LT(diff.abs(), prev_err) << t;
    prev_err = diff.abs();
  }
}

TEST(PhiConjugateTest, Examples) {
  EXPECT_EQ(phi_conjugate(ExactRational(2)), ExactRational(1));
  EXPECT_EQ(phi_conjugate(Q(13, 8)), Q(5, 8));
  EXPECT_EQ(rational_to_decimal(phi_conjugate(parse_decimal(kPhi36)), 36).to_string(), kConj36);
  EXPECT_EQ(phi_conjugate(parse_decimal(kPhi36)), parse_decimal(kConj36));
}

TEST(QuadraticResidualTest, Examples) {
  EXPECT_EQ(quadratic_residual(ExactRational(0)), ExactRational(-1));
  EXPECT_EQ(quadratic_residual(Q(5, 8)), Q(1, 64));
}

TEST(QuadraticResidualTest, ConvergentConjugatesHitInverseSquareDenominator) {
  for (std::size_t k = 1; k <= 200; ++k) {
    const ExactRational q = phi_conjugate(phi_continued_fraction(k).value);
    const ExactRational r = quadratic_residual(q);
    const ExactInt den = q.den();
    ASSERT_EQ(r.abs(), ExactRational(ExactInt(1), den * den)) << k;
  }
}

TEST(QuadraticResidualTest, FibonacciCassiniBruteForce) {
  // F_k^2 + F_k F_{k+1} - F_{k+1}^2 = +-1
  for (unsigned long k = 1; k <= 30; ++k) {
    const ExactInt a = testing::fibonacci(k);
    const ExactInt b = testing::fibonacci(k + 1);
    const ExactInt v = a * a + a * b - b * b;
    ASSERT_EQ(v.abs(), ExactInt(1)) << k;
  }
}

TEST(Sqrt5FromPhiConjugateTest, Examples) {
  EXPECT_EQ(sqrt5_from_phi_conjugate(Q(1, 2)), ExactRational(2));
  const ExactRational s = sqrt5_from_phi_conjugate(Q(377, 610));
  EXPECT_EQ(s, Q(682, 305));
  EXPECT_EQ(rational_to_decimal(s, 16).to_string(), "2.2360655737704918");
  EXPECT_EQ(sqrt5_from_phi_conjugate(parse_decimal(kConj36)),
            parse_decimal("2.236067977499789696409173668731276234"));
}

TEST(PhiOracleTest, DerivedFromSqrt5) {
  const PhiApproximant p = phi_from_sqrt5_oracle(30);
  EXPECT_EQ(p.method, PhiMethod::from_sqrt5_oracle);
  EXPECT_GT(p.value, ExactRational(0));
  EXPECT_EQ(ExactRational(2) * p.value - ExactRational(1), sqrt5_reference_value(30));
}

}  // namespace
}  // namespace qrl
