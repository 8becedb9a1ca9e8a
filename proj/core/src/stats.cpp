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

#include "profkit/stats.hpp"

#include <cmath>
#include <cstddef>

#include "profkit/errors.hpp"

namespace profkit {

std::string_view stars_label(Stars s) {
  switch (s) {
    case Stars::ns: return "ns";
    case Stars::one: return "*";
    case Stars::two: return "**";
    case Stars::three: return "***";
  }
  throw DataError("invalid stars value");
}

Stars assign_stars(double p) {
  if (p >= 0.05) return Stars::ns;
  if (p >= 0.01) return Stars::one;
  if (p >= 0.001) return Stars::two;
  return Stars::three;
}

double mean(const std::vector<double>& xs) {
  if (xs.empty()) throw DataError("mean of an empty sample");
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double sample_variance(const std::vector<double>& xs) {
  if (xs.size() < 2) throw DataError("sample variance needs n >= 2");
  const double m = mean(xs);
  double sum = 0.0;
  for (double x : xs) sum += (x - m) * (x - m);
  return sum / static_cast<double>(xs.size() - 1);
}

namespace {

constexpr double kEps = 1e-12;
constexpr double kTiny = 1e-300;

// Modified Lentz evaluation of the incomplete-beta continued fraction.
double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw DataError("incomplete beta did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (a <= 0.0 || b <= 0.0) {
    throw DataError("incomplete beta needs positive shape parameters");
  }
  if (x < 0.0 || x > 1.0) {
    throw DataError("incomplete beta argument outside [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log(1.0 - x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, int df) {
  if (df < 1) throw DataError("degrees of freedom must be >= 1");
  const double x =
      static_cast<double>(df) / (static_cast<double>(df) + t * t);
  return regularized_incomplete_beta(static_cast<double>(df) / 2.0, 0.5, x);
}

PairedTestResult paired_t_test(const std::vector<double>& a,
                               const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw DataError("paired t-test needs equal-length samples");
  }
  if (a.size() < 2) throw DataError("paired t-test needs n >= 2");
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  const double md = mean(d);
  const double var = sample_variance(d);
  if (var == 0.0) {
    throw DataError("paired differences have zero variance; test undefined");
  }
  const double n = static_cast<double>(d.size());
  PairedTestResult result;
  result.t_statistic = md / (std::sqrt(var) / std::sqrt(n));
  result.degrees_of_freedom = static_cast<int>(d.size()) - 1;
  result.p_value = student_t_two_sided_p(result.t_statistic,
                                         result.degrees_of_freedom);
  result.stars = assign_stars(result.p_value);
  return result;
}

}  // namespace profkit
