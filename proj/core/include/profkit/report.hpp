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

#ifndef PROFKIT_REPORT_HPP
#define PROFKIT_REPORT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "profkit/stats.hpp"

namespace profkit {

// One metric value in long format. `variant` is either a single profile
// variant or a pair label like "MeshGen_vs_Human" depending on the family.
struct MetricRow {
  std::string family;  // lexical | divergence | semantic | syntactic | topics
  std::string metric;
  std::string variant;
  std::string researcher_id;
  double value = 0.0;
};

struct TestOutcome {
  std::string family;
  std::string metric;
  std::string variant_a;
  std::string variant_b;
  // A test is degenerate when the paired differences have zero variance; the
  // result fields are then meaningless and left default.
  bool degenerate = false;
  PairedTestResult result;
};

struct MetricReport {
  std::vector<MetricRow> rows;     // sorted (family, metric, variant, id)
  std::vector<TestOutcome> tests;  // one per metric x variant pair
  std::vector<std::string> notes;  // documented deviations, warnings
};

// Sorts rows, rejects duplicate (family, metric, variant, researcher_id)
// cells, and runs paired t-tests between every two variant labels of each
// (family, metric) group that cover the same researcher set of size >= 2.
MetricReport build_report(std::vector<MetricRow> rows,
                          std::vector<std::string> notes = {});

// report.json plus one long-format CSV per family
// (header metric,variant,researcher_id,value). Emission is deterministic:
// identical reports serialize byte-identically.
void emit_report(const MetricReport& report, const std::filesystem::path& dir);

std::string report_json(const MetricReport& report);
std::string family_csv(const MetricReport& report, const std::string& family);
std::vector<std::string> report_families(const MetricReport& report);

}  // namespace profkit

#endif  // PROFKIT_REPORT_HPP
