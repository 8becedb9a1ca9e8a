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

#include "profkit/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <nlohmann/json.hpp>
#include <tuple>

#include "profkit/errors.hpp"
#include "profkit/util.hpp"

namespace profkit {

using json = nlohmann::json;

namespace {

auto row_key(const MetricRow& r) {
  return std::tie(r.family, r.metric, r.variant, r.researcher_id);
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

MetricReport build_report(std::vector<MetricRow> rows,
                          std::vector<std::string> notes) {
  if (rows.empty()) throw DataError("report needs at least one metric row");
  std::sort(rows.begin(), rows.end(), [](const MetricRow& a,
                                         const MetricRow& b) {
    return row_key(a) < row_key(b);
  });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (row_key(rows[i]) == row_key(rows[i - 1])) {
      throw DataError("duplicate metric cell " + rows[i].family + "/" +
                      rows[i].metric + "/" + rows[i].variant + "/" +
                      rows[i].researcher_id);
    }
  }

  MetricReport report;
  report.rows = std::move(rows);
  report.notes = std::move(notes);

  // variant -> researcher -> value, per (family, metric). All maps are
  // ordered so the emitted tests come out in a stable order.
  std::map<std::pair<std::string, std::string>,
           std::map<std::string, std::map<std::string, double>>>
      groups;
  for (const MetricRow& row : report.rows) {
    groups[{row.family, row.metric}][row.variant][row.researcher_id] =
        row.value;
  }
  for (const auto& [fm, by_variant] : groups) {
    std::vector<std::string> variants;
    variants.reserve(by_variant.size());
    for (const auto& [variant, values] : by_variant) {
      variants.push_back(variant);
    }
    for (std::size_t i = 0; i < variants.size(); ++i) {
      for (std::size_t j = i + 1; j < variants.size(); ++j) {
        const auto& va = by_variant.at(variants[i]);
        const auto& vb = by_variant.at(variants[j]);
        if (va.size() != vb.size() || va.size() < 2) continue;
        bool same_ids = std::equal(
            va.begin(), va.end(), vb.begin(),
            [](const auto& x, const auto& y) { return x.first == y.first; });
        if (!same_ids) continue;
        TestOutcome outcome;
        outcome.family = fm.first;
        outcome.metric = fm.second;
        outcome.variant_a = variants[i];
        outcome.variant_b = variants[j];
        std::vector<double> a;
        std::vector<double> b;
        a.reserve(va.size());
        b.reserve(vb.size());
        for (const auto& [id, value] : va) {
          a.push_back(value);
          b.push_back(vb.at(id));
        }
        try {
          outcome.result = paired_t_test(a, b);
        } catch (const DataError&) {
          outcome.degenerate = true;
        }
        report.tests.push_back(std::move(outcome));
      }
    }
  }
  return report;
}

std::string report_json(const MetricReport& report) {
  json doc;
  doc["format_version"] = 1;
  doc["notes"] = report.notes;
  json rows = json::array();
  for (const MetricRow& row : report.rows) {
    rows.push_back({{"family", row.family},
                    {"metric", row.metric},
                    {"variant", row.variant},
                    {"researcher_id", row.researcher_id},
                    {"value", row.value}});
  }
  doc["rows"] = std::move(rows);
  json tests = json::array();
  for (const TestOutcome& t : report.tests) {
    json entry = {{"family", t.family},
                  {"metric", t.metric},
                  {"variant_a", t.variant_a},
                  {"variant_b", t.variant_b},
                  {"degenerate", t.degenerate}};
    if (!t.degenerate) {
      entry["t_statistic"] = t.result.t_statistic;
      entry["degrees_of_freedom"] = t.result.degrees_of_freedom;
      entry["p_value"] = t.result.p_value;
      entry["stars"] = std::string(stars_label(t.result.stars));
    }
    tests.push_back(std::move(entry));
  }
  doc["tests"] = std::move(tests);
  return doc.dump(2) + "\n";
}

std::vector<std::string> report_families(const MetricReport& report) {
  std::vector<std::string> families;
  for (const MetricRow& row : report.rows) {
    if (families.empty() || families.back() != row.family) {
      families.push_back(row.family);
    }
  }
  return families;
}

std::string family_csv(const MetricReport& report, const std::string& family) {
  std::string csv = "metric,variant,researcher_id,value\n";
  bool found = false;
  for (const MetricRow& row : report.rows) {
    if (row.family != family) continue;
    found = true;
    csv += csv_field(row.metric) + "," + csv_field(row.variant) + "," +
           csv_field(row.researcher_id) + "," + format_value(row.value) + "\n";
  }
  if (!found) throw DataError("no rows for metric family " + family);
  return csv;
}

void emit_report(const MetricReport& report,
                 const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_file(dir / "report.json", report_json(report));
  for (const std::string& family : report_families(report)) {
    write_file(dir / (family + ".csv"), family_csv(report, family));
  }
}

}  // namespace profkit
