// Copyright 2026 The Profkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "profkit/errors.hpp"
#include "profkit/stats.hpp"

using namespace profkit;

TEST_CASE("mean and sample variance") {
  CHECK(mean({2.0, 4.0, 6.0}) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(mean({5.0}) == doctest::Approx(5.0).epsilon(1e-15));
  // {2, 4, 4, 4, 5, 5, 7, 9}: mean 5, squared deviations sum 32, n-1 = 7.
  CHECK(sample_variance({2, 4, 4, 4, 5, 5, 7, 9}) ==
        doctest::Approx(32.0 / 7.0).epsilon(1e-15));
  CHECK(sample_variance({3.0, 3.0, 3.0}) == doctest::Approx(0.0));
  CHECK_THROWS_AS((void)mean({}), DataError);
  CHECK_THROWS_AS((void)sample_variance({1.0}), DataError);
  CHECK_THROWS_AS((void)sample_variance({}), DataError);
}

TEST_CASE("regularized incomplete beta edges and closed forms") {
  CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);

  // I_x(1, 1) = x, I_x(a, 1) = x^a, I_x(1, b) = 1 - (1-x)^b.
  CHECK(regularized_incomplete_beta(1.0, 1.0, 0.37) ==
        doctest::Approx(0.37).epsilon(1e-12));
  CHECK(regularized_incomplete_beta(3.0, 1.0, 0.5) ==
        doctest::Approx(0.125).epsilon(1e-12));
  CHECK(regularized_incomplete_beta(1.0, 4.0, 0.25) ==
        doctest::Approx(1.0 - std::pow(0.75, 4)).epsilon(1e-12));

  // Symmetry I_x(a, b) = 1 - I_{1-x}(b, a) across the continued-fraction
  // branch switch at x = (a+1)/(a+b+2).
  std::mt19937_64 rng(20260814);
  std::uniform_real_distribution<double> par(0.2, 8.0);
  std::uniform_real_distribution<double> arg(0.001, 0.999);
  for (int i = 0; i < 200; ++i) {
    double a = par(rng);
    double b = par(rng);
    double x = arg(rng);
    double lhs = regularized_incomplete_beta(a, b, x);
    double rhs = 1.0 - regularized_incomplete_beta(b, a, 1.0 - x);
    CHECK(std::fabs(lhs - rhs) < 1e-10);
    CHECK(lhs >= 0.0);
    CHECK(lhs <= 1.0);
  }

  // Monotone nondecreasing in x.
  double prev = 0.0;
  for (int i = 1; i <= 20; ++i) {
    double cur = regularized_incomplete_beta(2.5, 4.5, i / 20.0);
    CHECK(cur >= prev - 1e-12);
    prev = cur;
  }
}

TEST_CASE("two-sided t p-values match fixed table") {
  // t = 0 is the center of a symmetric density: both tails together cover
  // everything.
  CHECK(student_t_two_sided_p(0.0, 4) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(std::fabs(student_t_two_sided_p(1.0, 9) - 0.34343639613791355) < 1e-6);
  CHECK(std::fabs(student_t_two_sided_p(2.5, 29) - 0.01832534433842607) <
        1e-6);
  CHECK(std::fabs(student_t_two_sided_p(14.142135623730951, 4) -
                  0.0001451281706131975) < 1e-6);

  // df = 2 has the closed form p = 1 - |t| / sqrt(t^2 + 2), so t = 1/2 gives
  // exactly 2/3.
  CHECK(std::fabs(student_t_two_sided_p(0.5, 2) - 2.0 / 3.0) < 1e-9);

  // Two-sided: sign of t cannot matter.
  CHECK(student_t_two_sided_p(-2.5, 29) ==
        doctest::Approx(student_t_two_sided_p(2.5, 29)).epsilon(1e-15));
}

TEST_CASE("t p-values agree with independent tail integration") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> t_dist(-6.0, 6.0);
  std::uniform_int_distribution<int> df_dist(1, 60);
  for (int i = 0; i < 50; ++i) {
    double t = t_dist(rng);
    int df = df_dist(rng);
    double got = student_t_two_sided_p(t, df);
    double want = oracles::student_t_p_simpson(t, df);
    CAPTURE(t);
    CAPTURE(df);
    CHECK(std::fabs(got - want) < 1e-6);
  }
}

TEST_CASE("paired t-test on a fixed example") {
  // Differences 1.2, 0.8, 1.0, 1.1, 0.9: mean 1, sample sd sqrt(0.025),
  // t = sqrt(5) / sqrt(0.025) = 10 * sqrt(2).
  std::vector<double> a{2.2, 1.8, 2.0, 2.1, 1.9};
  std::vector<double> b{1.0, 1.0, 1.0, 1.0, 1.0};
  PairedTestResult r = paired_t_test(a, b);
  CHECK(r.degrees_of_freedom == 4);
  CHECK(std::fabs(r.t_statistic - 14.142135623730951) < 1e-12);
  CHECK(std::fabs(r.p_value - 0.0001451281706131975) < 1e-6);
  CHECK(r.stars == Stars::three);

  // Swapping the samples flips the sign of t but not the p-value.
  PairedTestResult s = paired_t_test(b, a);
  CHECK(std::fabs(s.t_statistic + 14.142135623730951) < 1e-12);
  CHECK(s.p_value == doctest::Approx(r.p_value).epsilon(1e-15));
}

TEST_CASE("paired t-test input validation") {
  CHECK_THROWS_AS((void)paired_t_test({1.0, 2.0}, {1.0}), DataError);
  CHECK_THROWS_AS((void)paired_t_test({1.0}, {2.0}), DataError);
  CHECK_THROWS_AS((void)paired_t_test({}, {}), DataError);
  // Constant differences have zero variance: t is undefined.
  CHECK_THROWS_AS((void)paired_t_test({3.0, 4.0, 5.0}, {2.0, 3.0, 4.0}),
                  DataError);
}

TEST_CASE("significance stars use half-open brackets") {
  CHECK(assign_stars(1.0) == Stars::ns);
  CHECK(assign_stars(0.05) == Stars::ns);
  CHECK(assign_stars(0.049999999) == Stars::one);
  CHECK(assign_stars(0.01) == Stars::one);
  CHECK(assign_stars(0.009999999) == Stars::two);
  CHECK(assign_stars(0.001) == Stars::two);
  CHECK(assign_stars(0.0009999999) == Stars::three);
  CHECK(assign_stars(0.0) == Stars::three);

  CHECK(stars_label(Stars::ns) == "ns");
  CHECK(stars_label(Stars::one) == "*");
  CHECK(stars_label(Stars::two) == "**");
  CHECK(stars_label(Stars::three) == "***");
}
