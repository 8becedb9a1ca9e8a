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

#ifndef PROFKIT_RATINGS_HPP
#define PROFKIT_RATINGS_HPP

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "profkit/corpus.hpp"

namespace profkit {

// Quality dimensions use {Very poor, Poor, Fair, Good, Excellent};
// granularity uses {Too general, General, Good granularity, Detailed,
// Too detailed}. Labels are stored verbatim and validated on load.
struct RatingRecord {
  int faculty_id = 0;
  int rater_index = 0;
  Variant variant = Variant::Human;
  std::map<std::string, std::string> dimensions;
  bool identified_as_human = false;

  bool operator==(const RatingRecord&) const = default;
};

inline constexpr const char* kRatingDimensions[] = {
    "overall",       "factual_accuracy", "granularity", "readability",
    "comprehensiveness", "specificity",  "conciseness"};

// CSV header: faculty,rater,variant,overall,factual_accuracy,granularity,
// readability,comprehensiveness,specificity,conciseness,identified_as_human.
// Unknown category labels raise DataError naming the row.
std::vector<RatingRecord> load_ratings(const std::filesystem::path& path);
std::vector<RatingRecord> parse_ratings(std::string_view csv,
                                        std::string_view origin = "<memory>");
std::string serialize_ratings(const std::vector<RatingRecord>& records);

struct AgreementResult {
  double ac1 = 0.0;
  double pa = 0.0;  // observed agreement
  double pe = 0.0;  // chance agreement
  std::size_t n_items = 0;
  std::size_t n_raters = 0;
  std::size_t n_categories = 0;
};

// items[i] = the category labels this item received, one per rater.
// pa = mean_i sum_k r_ik(r_ik-1) / (r_i(r_i-1)); pi_k = mean_i r_ik/r_i;
// pe = sum_k pi_k(1-pi_k) / (q-1); ac1 = (pa-pe)/(1-pe).
// n_categories fixes q independently of which labels actually occur.
AgreementResult gwet_ac1(const std::vector<std::vector<std::string>>& items,
                         std::size_t n_categories);

// Pools overall-impression labels into items keyed by (faculty, variant).
// Item order is deterministic (faculty, then variant declaration order).
std::vector<std::vector<std::string>> pool_overall_items(
    const std::vector<RatingRecord>& records);

enum class AgreementBand { Low, Middle, High };

AgreementBand parse_band(std::string_view name);
std::string_view band_name(AgreementBand band);

// Majority overall label per item decides the band: {Very poor, Poor} low,
// {Fair} middle, {Good, Excellent} high; no majority goes middle.
AgreementBand classify_band(const std::vector<std::string>& item_labels);

AgreementResult stratified_ac1(const std::vector<RatingRecord>& records,
                               AgreementBand band);

// fraction of ratings labeled Good or Excellent, per dimension, for one
// variant. Granularity never matches (its scale has different labels).
std::map<std::string, double> summary_percentages(
    const std::vector<RatingRecord>& records, Variant variant);

// fraction of records for the variant with identified_as_human set.
double identified_as_human_fraction(const std::vector<RatingRecord>& records,
                                    Variant variant);

}  // namespace profkit

#endif  // PROFKIT_RATINGS_HPP
