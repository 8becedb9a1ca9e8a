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

#include "profkit/prompt.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <unordered_set>
#include <utility>

#include "profkit/errors.hpp"
#include "profkit/util.hpp"

namespace profkit {

namespace {

// Keep these byte-identical with assets/prompts/v1/*.txt; the template tests
// compare the two.
constexpr const char* kSystemProfiler =
    "You are an expert science writer at an academic medical center. You "
    "write factual, narrative research interest profiles for faculty "
    "members. Write in the third person, in flowing prose, without headings "
    "or bullet lists. Never invent facts that the provided material does not "
    "support.\n";

constexpr const char* kMeshProfile =
    "Here is an example of the profiling task.\n"
    "\n"
    "Example instructions:\n"
    "{{EXAMPLE_INSTRUCTIONS}}\n"
    "\n"
    "Example source material:\n"
    "{{EXAMPLE_SOURCE}}\n"
    "\n"
    "Example profile:\n"
    "{{EXAMPLE_PROFILE}}\n"
    "\n"
    "Now write a research interest profile for {{RESEARCHER_NAME}}. The "
    "source material lists Medical Subject Headings drawn from the "
    "researcher's publications, split into a methodology group and a health "
    "domain group. Summarize each group separately, then weave both "
    "summaries into one narrative profile of the researcher's scientific "
    "interests, written in the third person.\n"
    "\n"
    "{{TERM_SECTIONS}}\n";

constexpr const char* kCondense =
    "The following publication abstracts by {{RESEARCHER_NAME}} share one "
    "research topic. Condense them into a single succinct paragraph of at "
    "most 150 words that captures the topic, the methods used, and the main "
    "findings. Write in the third person.\n"
    "\n"
    "{{ABSTRACTS}}\n";

constexpr const char* kCombine =
    "Here is an example of the profiling task.\n"
    "\n"
    "Example instructions:\n"
    "{{EXAMPLE_INSTRUCTIONS}}\n"
    "\n"
    "Example source material:\n"
    "{{EXAMPLE_SOURCE}}\n"
    "\n"
    "Example profile:\n"
    "{{EXAMPLE_PROFILE}}\n"
    "\n"
    "The following paragraphs each condense one topic from the publication "
    "record of {{RESEARCHER_NAME}}. Combine them into one narrative research "
    "interest profile written in the third person, following the style of "
    "the example profile.\n"
    "\n"
    "{{TOPIC_SUMMARIES}}\n";

constexpr const char* kParaphrase =
    "Paraphrase the following research interest profile of "
    "{{RESEARCHER_NAME}}. Preserve the meaning, the factual content, and the "
    "third-person voice, but use your own wording and sentence structure. Do "
    "not add or remove information.\n"
    "\n"
    "{{PROFILE}}\n";

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> example_values(
    const OneShotExample& example) {
  return {{"EXAMPLE_INSTRUCTIONS", example.instructions},
          {"EXAMPLE_SOURCE", example.source_material},
          {"EXAMPLE_PROFILE", example.exemplar_profile}};
}

std::string bullet_section(const std::string& label,
                           const std::vector<std::string>& terms) {
  std::string out = label + ":";
  for (const std::string& term : terms) out += "\n- " + term;
  return out;
}

std::string abstract_block(const PublicationRecord& doc,
                           std::string_view text) {
  std::string block = "Title: " + doc.title + "\nAbstract: ";
  block.append(text);
  return block;
}

void check_budget(const PromptStage& stage, int budget_tokens,
                  const TokenCounter& counter, Strategy strategy) {
  const int total =
      counter.count(stage.system_text) + counter.count(stage.user_text);
  if (total > budget_tokens) {
    throw ConfigError(std::string(strategy_name(strategy)) +
                      " stage needs " + std::to_string(total) +
                      " tokens but the budget is " +
                      std::to_string(budget_tokens));
  }
}

// Longest prefix of `text` ending on a code-point boundary whose stage still
// fits the budget. render_stage must be monotone in the prefix length.
std::string truncate_to_fit(
    const std::string& text, int budget_tokens, const TokenCounter& counter,
    const std::function<std::pair<std::string, std::string>(std::string_view)>&
        render_stage) {
  auto fits = [&](std::size_t len) {
    auto [system_text, user_text] = render_stage(text.substr(0, len));
    return counter.count(system_text) + counter.count(user_text) <=
           budget_tokens;
  };
  if (!fits(0)) {
    throw ConfigError("token budget too small for a condense stage");
  }
  std::size_t lo = 0;
  std::size_t hi = text.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  while (lo > 0 && (static_cast<unsigned char>(text[lo]) & 0xC0) == 0x80) {
    --lo;
  }
  return text.substr(0, lo);
}

}  // namespace

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::MeshBased: return "mesh";
    case Strategy::AbstractBased: return "abstract";
    case Strategy::Paraphrase: return "paraphrase";
  }
  throw ConfigError("invalid strategy value");
}

MeshSplit categorize_mesh_terms(const std::vector<std::string>& terms,
                                const MeshVocabulary& vocab,
                                const MeshBranchConfig& config) {
  MeshSplit split;
  std::unordered_set<std::string> seen;
  auto in_branches = [](const std::vector<std::string>& trees,
                        const std::vector<char>& branches) {
    for (const std::string& tree : trees) {
      if (tree.empty()) continue;
      if (std::find(branches.begin(), branches.end(), tree.front()) !=
          branches.end()) {
        return true;
      }
    }
    return false;
  };
  for (const std::string& term : terms) {
    if (!seen.insert(lower(term)).second) continue;
    if (!vocab.contains(term)) {
      split.unassigned.push_back(term);
      continue;
    }
    const std::vector<std::string>& trees = vocab.tree_numbers(term);
    if (in_branches(trees, config.methodology_branches)) {
      split.methodology_terms.push_back(term);
    } else if (in_branches(trees, config.health_branches)) {
      split.health_terms.push_back(term);
    } else {
      split.unassigned.push_back(term);
    }
  }
  return split;
}

TemplateSet TemplateSet::load(const std::filesystem::path& dir) {
  auto slot = [&](const char* name) {
    std::filesystem::path file = dir / name;
    if (!std::filesystem::exists(file)) {
      throw ConfigError("missing prompt template " + file.string());
    }
    return read_file(file);
  };
  TemplateSet set;
  set.system_profiler_ = slot("system_profiler.txt");
  set.mesh_profile_ = slot("mesh_profile.txt");
  set.condense_ = slot("condense.txt");
  set.combine_ = slot("combine.txt");
  set.paraphrase_ = slot("paraphrase.txt");
  return set;
}

TemplateSet TemplateSet::builtin() {
  TemplateSet set;
  set.system_profiler_ = kSystemProfiler;
  set.mesh_profile_ = kMeshProfile;
  set.condense_ = kCondense;
  set.combine_ = kCombine;
  set.paraphrase_ = kParaphrase;
  return set;
}

std::string render_template(
    const std::string& tmpl,
    const std::vector<std::pair<std::string, std::string>>& values) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    std::size_t open = tmpl.find("{{", pos);
    if (open == std::string::npos) {
      out.append(tmpl, pos, std::string::npos);
      break;
    }
    out.append(tmpl, pos, open - pos);
    std::size_t close = tmpl.find("}}", open + 2);
    if (close == std::string::npos) {
      throw ConfigError("unterminated {{ placeholder in template");
    }
    const std::string key = tmpl.substr(open + 2, close - open - 2);
    auto it = std::find_if(values.begin(), values.end(),
                           [&](const auto& kv) { return kv.first == key; });
    if (it == values.end()) {
      throw ConfigError("template placeholder {{" + key + "}} has no value");
    }
    // Values are appended verbatim, never rescanned, so a value may safely
    // contain {{STAGE_k}} markers for run_plan to splice later.
    out += it->second;
    pos = close + 2;
  }
  return out;
}

int estimate_tokens(std::string_view text) {
  return static_cast<int>((text.size() + 3) / 4);
}

int TokenCounter::count(std::string_view text) const {
  return estimate_tokens(text);
}

PromptPlan build_mesh_plan(const Researcher& researcher, const MeshSplit& split,
                           const OneShotExample& example,
                           const TemplateSet& templates, int budget_tokens,
                           const TokenCounter& counter) {
  if (split.methodology_terms.empty() && split.health_terms.empty() &&
      split.unassigned.empty()) {
    throw DataError("researcher " + researcher.id + " has no terms to profile");
  }
  // Unassigned terms ride along with the health section rather than being
  // dropped.
  std::vector<std::string> health = split.health_terms;
  health.insert(health.end(), split.unassigned.begin(), split.unassigned.end());
  std::vector<std::string> sections;
  if (!split.methodology_terms.empty()) {
    sections.push_back(
        bullet_section("Methodology terms", split.methodology_terms));
  }
  if (!health.empty()) {
    sections.push_back(bullet_section("Health domain terms", health));
  }
  auto values = example_values(example);
  values.emplace_back("RESEARCHER_NAME", researcher.name);
  values.emplace_back("TERM_SECTIONS", join(sections, "\n\n"));

  PromptPlan plan;
  plan.strategy = Strategy::MeshBased;
  plan.researcher_id = researcher.id;
  PromptStage stage;
  stage.system_text = templates.system_profiler();
  stage.user_text = render_template(templates.mesh_profile(), values);
  check_budget(stage, budget_tokens, counter, Strategy::MeshBased);
  plan.stages.push_back(std::move(stage));
  return plan;
}

PromptPlan build_abstract_plan(const Researcher& researcher,
                               const std::vector<PublicationRecord>& docs,
                               const LdaModel& model,
                               const std::vector<std::size_t>& doc_to_model_index,
                               const OneShotExample& example,
                               const TemplateSet& templates, int budget_tokens,
                               const TokenCounter& counter,
                               std::vector<std::string>* warnings) {
  if (docs.empty()) {
    throw DataError("researcher " + researcher.id + " has no publications");
  }
  if (doc_to_model_index.size() != docs.size()) {
    throw DataError("doc_to_model_index must cover every publication");
  }

  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (docs[i].abstract_text.empty()) continue;
    groups[dominant_topic(model, doc_to_model_index[i])].push_back(i);
  }
  if (groups.empty()) {
    throw DataError("researcher " + researcher.id +
                    " has no abstracts to condense");
  }

  auto render_condense = [&](const std::vector<std::string>& blocks) {
    return render_template(templates.condense(),
                           {{"RESEARCHER_NAME", researcher.name},
                            {"ABSTRACTS", join(blocks, "\n\n")}});
  };
  auto stage_fits = [&](const std::vector<std::string>& blocks) {
    return counter.count(templates.system_profiler()) +
               counter.count(render_condense(blocks)) <=
           budget_tokens;
  };

  PromptPlan plan;
  plan.strategy = Strategy::AbstractBased;
  plan.researcher_id = researcher.id;

  // Greedy packing per topic group: extend the open batch while the rendered
  // stage still fits; a lone over-budget abstract gets truncated.
  for (const auto& [topic, members] : groups) {
    std::vector<std::string> batch;
    auto flush = [&]() {
      if (batch.empty()) return;
      PromptStage stage;
      stage.system_text = templates.system_profiler();
      stage.user_text = render_condense(batch);
      plan.stages.push_back(std::move(stage));
      batch.clear();
    };
    for (std::size_t i : members) {
      std::string block = abstract_block(docs[i], docs[i].abstract_text);
      if (!stage_fits({block})) {
        std::string kept = truncate_to_fit(
            docs[i].abstract_text, budget_tokens, counter,
            [&](std::string_view prefix) {
              return std::make_pair(templates.system_profiler(),
                                    render_condense(
                                        {abstract_block(docs[i], prefix)}));
            });
        if (warnings) {
          warnings->push_back("abstract for pmid " + docs[i].pmid +
                              " truncated from " +
                              std::to_string(docs[i].abstract_text.size()) +
                              " to " + std::to_string(kept.size()) +
                              " bytes to fit the token budget");
        }
        block = abstract_block(docs[i], kept);
      }
      batch.push_back(block);
      if (!stage_fits(batch)) {
        batch.pop_back();
        flush();
        batch.push_back(std::move(block));
      }
    }
    flush();
  }

  const std::size_t condense_count = plan.stages.size();
  std::vector<std::string> summary_blocks;
  summary_blocks.reserve(condense_count);
  for (std::size_t k = 0; k < condense_count; ++k) {
    summary_blocks.push_back("Topic summary " + std::to_string(k + 1) +
                             ":\n{{STAGE_" + std::to_string(k) + "}}");
  }
  auto values = example_values(example);
  values.emplace_back("RESEARCHER_NAME", researcher.name);
  values.emplace_back("TOPIC_SUMMARIES", join(summary_blocks, "\n\n"));
  PromptStage combine;
  combine.system_text = templates.system_profiler();
  combine.user_text = render_template(templates.combine(), values);
  check_budget(combine, budget_tokens, counter, Strategy::AbstractBased);
  plan.stages.push_back(std::move(combine));
  return plan;
}

PromptPlan build_paraphrase_plan(const Researcher& researcher,
                                 const std::string& human_profile_text,
                                 const TemplateSet& templates, int budget_tokens,
                                 const TokenCounter& counter) {
  if (human_profile_text.empty()) {
    throw DataError("researcher " + researcher.id + " has no human profile");
  }
  PromptPlan plan;
  plan.strategy = Strategy::Paraphrase;
  plan.researcher_id = researcher.id;
  PromptStage stage;
  stage.system_text = templates.system_profiler();
  stage.user_text = render_template(templates.paraphrase(),
                                    {{"RESEARCHER_NAME", researcher.name},
                                     {"PROFILE", human_profile_text}});
  check_budget(stage, budget_tokens, counter, Strategy::Paraphrase);
  plan.stages.push_back(std::move(stage));
  return plan;
}

namespace {

Variant variant_for(Strategy s) {
  switch (s) {
    case Strategy::MeshBased: return Variant::MeshGen;
    case Strategy::AbstractBased: return Variant::AbstractGen;
    case Strategy::Paraphrase: return Variant::Paraphrase;
  }
  throw ConfigError("invalid strategy value");
}

}  // namespace

ProfileDoc run_plan(LlmProvider& provider, const PromptPlan& plan,
                    const std::string& created_at, int max_output_tokens) {
  if (plan.stages.empty()) throw DataError("plan has no stages");
  std::vector<std::string> outputs;
  outputs.reserve(plan.stages.size());
  for (std::size_t k = 0; k < plan.stages.size(); ++k) {
    std::string user = plan.stages[k].user_text;
    for (std::size_t j = 0; j < outputs.size(); ++j) {
      const std::string marker = "{{STAGE_" + std::to_string(j) + "}}";
      std::size_t pos = 0;
      while ((pos = user.find(marker, pos)) != std::string::npos) {
        user.replace(pos, marker.size(), outputs[j]);
        pos += outputs[j].size();
      }
    }
    const std::string label = "stage " + std::to_string(k + 1);
    if (user.find("{{STAGE_") != std::string::npos) {
      throw DataError(label + " references a stage that has not run yet");
    }
    if (estimate_tokens(plan.stages[k].system_text) + estimate_tokens(user) >
        provider.context_limit_tokens()) {
      throw ConfigError(label + " exceeds the provider context limit");
    }
    std::string completion;
    try {
      completion = provider.complete(plan.stages[k].system_text, user,
                                     max_output_tokens);
    } catch (const TransportError& e) {
      throw TransportError(label + ": " + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError(label + ": " + e.what());
    } catch (const DataError& e) {
      throw DataError(label + ": " + e.what());
    }
    if (completion.empty()) {
      throw DataError(label + " returned an empty completion");
    }
    outputs.push_back(std::move(completion));
  }
  ProfileDoc doc;
  doc.researcher_id = plan.researcher_id;
  doc.variant = variant_for(plan.strategy);
  doc.text = outputs.back();
  doc.created_at = created_at;
  return doc;
}

}  // namespace profkit
