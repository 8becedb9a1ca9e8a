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

#ifndef PROFKIT_PROMPT_HPP
#define PROFKIT_PROMPT_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "profkit/corpus.hpp"
#include "profkit/lda.hpp"
#include "profkit/mesh_vocab.hpp"
#include "profkit/provider.hpp"

namespace profkit {

enum class Strategy { MeshBased, AbstractBased, Paraphrase };

std::string_view strategy_name(Strategy s);

struct PromptStage {
  std::string system_text;
  std::string user_text;  // may contain {{STAGE_k}} placeholders
};

struct OneShotExample {
  std::string instructions;
  std::string source_material;
  std::string exemplar_profile;
};

struct PromptPlan {
  Strategy strategy = Strategy::MeshBased;
  std::string researcher_id;
  std::vector<PromptStage> stages;
};

struct MeshSplit {
  std::vector<std::string> methodology_terms;
  std::vector<std::string> health_terms;
  std::vector<std::string> unassigned;
};

// Branch prefixes are single tree letters; defaults: methodology E, L, H and
// health C, F, G. Terms not in the vocabulary, or in neither branch set, go
// to unassigned. Input order is preserved within each list; duplicates
// (case-insensitive) are dropped first.
struct MeshBranchConfig {
  std::vector<char> methodology_branches = {'E', 'L', 'H'};
  std::vector<char> health_branches = {'C', 'F', 'G'};
};

MeshSplit categorize_mesh_terms(const std::vector<std::string>& terms,
                                const MeshVocabulary& vocab,
                                const MeshBranchConfig& config = {});

// Prompt templates are text assets with {{PLACEHOLDER}} slots, loaded from a
// directory: system_profiler.txt, mesh_profile.txt, condense.txt,
// combine.txt, paraphrase.txt.
class TemplateSet {
 public:
  static TemplateSet load(const std::filesystem::path& dir);
  // Compiled-in copies of the v1 templates, for tests and defaults.
  static TemplateSet builtin();

  const std::string& system_profiler() const { return system_profiler_; }
  const std::string& mesh_profile() const { return mesh_profile_; }
  const std::string& condense() const { return condense_; }
  const std::string& combine() const { return combine_; }
  const std::string& paraphrase() const { return paraphrase_; }

 private:
  std::string system_profiler_;
  std::string mesh_profile_;
  std::string condense_;
  std::string combine_;
  std::string paraphrase_;
};

// Replaces every {{KEY}} with its value; unknown keys raise ConfigError so
// template drift fails loudly.
std::string render_template(
    const std::string& tmpl,
    const std::vector<std::pair<std::string, std::string>>& values);

// ceil(bytes/4) heuristic; monotone in the byte length.
int estimate_tokens(std::string_view text);

// Exact-tokenizer hook; the default uses estimate_tokens.
class TokenCounter {
 public:
  virtual ~TokenCounter() = default;
  virtual int count(std::string_view text) const;
};

// Single stage: one-shot example block, then labeled methodology and health
// term sections (health section carries the unassigned terms too; a section
// with no terms is omitted). Throws ConfigError if the stage exceeds budget.
PromptPlan build_mesh_plan(const Researcher& researcher, const MeshSplit& split,
                           const OneShotExample& example,
                           const TemplateSet& templates, int budget_tokens,
                           const TokenCounter& counter = TokenCounter());

// One condense stage per non-empty topic group (groups split into sub-batches
// when a single stage would exceed the budget) followed by a combine stage
// whose user text embeds every {{STAGE_k}} output. Abstracts longer than the
// whole budget are truncated with a warning appended to *warnings.
PromptPlan build_abstract_plan(const Researcher& researcher,
                               const std::vector<PublicationRecord>& docs,
                               const LdaModel& model,
                               const std::vector<std::size_t>& doc_to_model_index,
                               const OneShotExample& example,
                               const TemplateSet& templates, int budget_tokens,
                               const TokenCounter& counter = TokenCounter(),
                               std::vector<std::string>* warnings = nullptr);

PromptPlan build_paraphrase_plan(const Researcher& researcher,
                                 const std::string& human_profile_text,
                                 const TemplateSet& templates, int budget_tokens,
                                 const TokenCounter& counter = TokenCounter());

// Executes stages in order, splicing each completed stage's output into later
// user texts at {{STAGE_k}}. Provider errors are rethrown with the stage
// index prepended. created_at goes into the resulting ProfileDoc verbatim.
ProfileDoc run_plan(LlmProvider& provider, const PromptPlan& plan,
                    const std::string& created_at, int max_output_tokens = 1024);

}  // namespace profkit

#endif  // PROFKIT_PROMPT_HPP
