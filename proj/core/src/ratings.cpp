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

#include "profkit/ratings.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "profkit/errors.hpp"
#include "profkit/util.hpp"

namespace profkit {

namespace {

constexpr std::array<std::string_view, 5> kQualityLabels = {
    "Very poor", "Poor", "Fair", "Good", "Excellent"};
constexpr std::array<std::string_view, 5> kGranularityLabels = {
    "Too general", "General", "Good granularity", "Detailed", "Too detailed"};

constexpr const char* kHeader =
    "faculty,rater,variant,overall,factual_accuracy,granularity,readability,"
    "comprehensiveness,specificity,conciseness,identified_as_human";

bool valid_label(const std::string& dimension, const std::string& label) {
  const auto& labels =
      dimension == "granularity" ? kGranularityLabels : kQualityLabels;
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

std::string lower(std::string s) {
  for (char& c : s) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

}  // namespace

std::vector<RatingRecord> parse_ratings(std::string_view csv,
                                        std::string_view origin) {
  std::vector<std::string> lines = split(csv, '\n');
  if (lines.empty() || trim(lines[0]) != kHeader) {
    throw DataError(std::string(origin) +
                    ": ratings CSV header does not match the expected schema");
  }
  std::vector<RatingRecord> records;
  for (std::size_t line_no = 2; line_no <= lines.size(); ++line_no) {
    std::string line = trim(lines[line_no - 1]);
    if (line.empty()) continue;
    std::vector<std::string> cols = split(line, ',');
    if (cols.size() != 11) {
      throw DataError(std::string(origin) + " line " + std::to_string(line_no) +
                      ": expected 11 columns, got " +
                      std::to_string(cols.size()));
    }
    RatingRecord r;
    if (!digits_only(cols[0]) || !digits_only(cols[1])) {
      throw DataError(std::string(origin) + " line " + std::to_string(line_no) +
                      ": faculty and rater must be integers");
    }
    r.faculty_id = std::stoi(cols[0]);
    r.rater_index = std::stoi(cols[1]);
    r.variant = parse_variant(cols[2]);
    std::size_t col = 3;
    for (const char* dimension : kRatingDimensions) {
      const std::string& label = cols[col++];
      if (!valid_label(dimension, label)) {
        throw DataError(std::string(origin) + " line " +
                        std::to_string(line_no) + ": unknown " + dimension +
                        " label \"" + label + "\"");
      }
      r.dimensions[dimension] = label;
    }
    std::string flag = lower(cols[10]);
    if (flag == "true") {
      r.identified_as_human = true;
    } else if (flag == "false") {
      r.identified_as_human = false;
    } else {
      throw DataError(std::string(origin) + " line " + std::to_string(line_no) +
                      ": identified_as_human must be TRUE or FALSE, got \"" +
                      cols[10] + "\"");
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<RatingRecord> load_ratings(const std::filesystem::path& path) {
  return parse_ratings(read_file(path), path.string());
}

std::string serialize_ratings(const std::vector<RatingRecord>& records) {
  std::string out = kHeader;
  out += '\n';
  for (const RatingRecord& r : records) {
    out += std::to_string(r.faculty_id);
    out += ',';
    out += std::to_string(r.rater_index);
    out += ',';
    out += variant_name(r.variant);
    for (const char* dimension : kRatingDimensions) {
      out += ',';
      out += r.dimensions.at(dimension);
    }
    out += ',';
    out += r.identified_as_human ? "TRUE" : "FALSE";
    out += '\n';
  }
  return out;
}

AgreementResult gwet_ac1(const std::vector<std::vector<std::string>>& items,
                         std::size_t n_categories) {
  if (items.empty()) throw DataError("agreement needs at least one item");
  if (n_categories < 2) throw DataError("agreement needs at least 2 categories");

  double pa_sum = 0.0;
  std::map<std::string, double> pi_sums;
  std::size_t max_raters = 0;
  for (const auto& item : items) {
    const double r = static_cast<double>(item.size());
    if (item.size() < 2) {
      throw DataError("every item needs at least 2 ratings");
    }
    max_raters = std::max(max_raters, item.size());
    std::map<std::string, int> counts;
    for (const std::string& label : item) ++counts[label];
    if (counts.size() > n_categories) {
      throw DataError("item uses more labels than the declared category count");
    }
    double agree = 0.0;
    for (const auto& [label, rik] : counts) {
      agree += static_cast<double>(rik) * (rik - 1);
      pi_sums[label] += static_cast<double>(rik) / r;
    }
    pa_sum += agree / (r * (r - 1.0));
  }

  AgreementResult result;
  const double n = static_cast<double>(items.size());
  result.pa = pa_sum / n;
  double pe = 0.0;
  for (const auto& [label, sum] : pi_sums) {
    const double pi = sum / n;
    pe += pi * (1.0 - pi);
  }
  result.pe = pe / (static_cast<double>(n_categories) - 1.0);
  result.ac1 = (result.pa - result.pe) / (1.0 - result.pe);
  result.n_items = items.size();
  result.n_raters = max_raters;
  result.n_categories = n_categories;
  return result;
}

std::vector<std::vector<std::string>> pool_overall_items(
    const std::vector<RatingRecord>& records) {
  // Key order (faculty, variant enum value) fixes item order.
  std::map<std::pair<int, int>, std::vector<std::pair<int, std::string>>> groups;
  for (const RatingRecord& r : records) {
    groups[{r.faculty_id, static_cast<int>(r.variant)}].emplace_back(
        r.rater_index, r.dimensions.at("overall"));
  }
  std::vector<std::vector<std::string>> items;
  items.reserve(groups.size());
  for (auto& [key, labeled] : groups) {
    std::sort(labeled.begin(), labeled.end());
    std::vector<std::string> labels;
    labels.reserve(labeled.size());
    for (auto& [rater, label] : labeled) labels.push_back(std::move(label));
    items.push_back(std::move(labels));
  }
  return items;
}

AgreementBand parse_band(std::string_view name) {
  if (name == "low") return AgreementBand::Low;
  if (name == "middle") return AgreementBand::Middle;
  if (name == "high") return AgreementBand::High;
  throw ConfigError("unknown band \"" + std::string(name) +
                    "\" (expected low, middle or high)");
}

std::string_view band_name(AgreementBand band) {
  switch (band) {
    case AgreementBand::Low: return "low";
    case AgreementBand::Middle: return "middle";
    case AgreementBand::High: return "high";
  }
  throw DataError("invalid band value");
}

AgreementBand classify_band(const std::vector<std::string>& item_labels) {
  std::map<std::string, std::size_t> counts;
  for (const std::string& label : item_labels) ++counts[label];
  std::string majority;
  for (const auto& [label, count] : counts) {
    if (count * 2 > item_labels.size()) majority = label;
  }
  if (majority.empty()) return AgreementBand::Middle;
  if (majority == "Very poor" || majority == "Poor") return AgreementBand::Low;
  if (majority == "Fair") return AgreementBand::Middle;
  return AgreementBand::High;
}

AgreementResult stratified_ac1(const std::vector<RatingRecord>& records,
                               AgreementBand band) {
  std::vector<std::vector<std::string>> in_band;
  for (auto& item : pool_overall_items(records)) {
    if (classify_band(item) == band) in_band.push_back(std::move(item));
  }
  if (in_band.empty()) {
    throw DataError(std::string("no items fall in the ") +
                    std::string(band_name(band)) + " band");
  }
  return gwet_ac1(in_band, kQualityLabels.size());
}

std::map<std::string, double> summary_percentages(
    const std::vector<RatingRecord>& records, Variant variant) {
  std::map<std::string, std::size_t> good;
  std::size_t total = 0;
  for (const RatingRecord& r : records) {
    if (r.variant != variant) continue;
    ++total;
    for (const auto& [dimension, label] : r.dimensions) {
      if (label == "Good" || label == "Excellent") ++good[dimension];
    }
  }
  if (total == 0) {
    throw DataError(std::string("no ratings for variant ") +
                    std::string(variant_name(variant)));
  }
  std::map<std::string, double> out;
  for (const char* dimension : kRatingDimensions) {
    out[dimension] =
        static_cast<double>(good[dimension]) / static_cast<double>(total);
  }
  return out;
}

double identified_as_human_fraction(const std::vector<RatingRecord>& records,
                                    Variant variant) {
  std::size_t hits = 0;
  std::size_t total = 0;
  for (const RatingRecord& r : records) {
    if (r.variant != variant) continue;
    ++total;
    if (r.identified_as_human) ++hits;
  }
  if (total == 0) {
    throw DataError(std::string("no ratings for variant ") +
                    std::string(variant_name(variant)));
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

}  // namespace profkit
