// Copyright 2026 The Profkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROFKIT_STATS_HPP
#define PROFKIT_STATS_HPP

#include <string>
#include <string_view>
#include <vector>

namespace profkit {

enum class Stars { ns, one, two, three };

std::string_view stars_label(Stars s);

// ns iff p >= 0.05; * iff 0.01 <= p < 0.05; ** iff 0.001 <= p < 0.01;
// *** iff p < 0.001.
Stars assign_stars(double p);

struct PairedTestResult {
  double t_statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
  Stars stars = Stars::ns;
};

// Two-sided paired t-test with sample standard deviation of the differences.
// Throws DataError on length mismatch, n < 2, or zero-variance differences.
PairedTestResult paired_t_test(const std::vector<double>& a,
                               const std::vector<double>& b);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation to
// 1e-12. Exposed because the t-distribution tail is I_x(df/2, 1/2) with
// x = df/(df + t^2).
double regularized_incomplete_beta(double a, double b, double x);

// Two-sided Student-t p-value for a statistic with df degrees of freedom.
double student_t_two_sided_p(double t, int df);

double mean(const std::vector<double>& xs);
// Sample variance (n-1 denominator). Throws DataError when n < 2.
double sample_variance(const std::vector<double>& xs);

}  // namespace profkit

#endif  // PROFKIT_STATS_HPP
