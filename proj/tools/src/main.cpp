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
//
// profkit: researcher-profile generation and evaluation pipeline.
// Commands compose over a shared corpus.jsonl:
//   ingest -> topics -> generate -> evaluate -> humaneval -> report

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "profkit/conllu.hpp"
#include "profkit/corpus.hpp"
#include "profkit/divergence.hpp"
#include "profkit/errors.hpp"
#include "profkit/eutils.hpp"
#include "profkit/lda.hpp"
#include "profkit/lexical.hpp"
#include "profkit/mesh_vocab.hpp"
#include "profkit/prompt.hpp"
#include "profkit/provider.hpp"
#include "profkit/ratings.hpp"
#include "profkit/report.hpp"
#include "profkit/semantic.hpp"
#include "profkit/stats.hpp"
#include "profkit/syntactic.hpp"
#include "profkit/text.hpp"
#include "profkit/util.hpp"

#include "default_stoplist.inc"

using json = nlohmann::json;
using namespace profkit;

namespace {

constexpr const char* kFixedCreatedAt = "1970-01-01T00:00:00Z";

constexpr const char* kExampleInstructions =
    "Write a narrative research interest profile of the researcher in the "
    "third person. Ground every statement in the provided source material "
    "and keep the profile to one paragraph.";

const Variant kMachineVariants[] = {Variant::MeshGen, Variant::AbstractGen,
                                    Variant::Paraphrase};

void warn(const std::string& message) {
  std::cerr << "warning: " << message << "\n";
}

Stoplist parse_stoplist_text(std::string_view text) {
  std::vector<std::string> words;
  for (const std::string& line : split(text, '\n')) {
    std::string word = trim(line);
    if (word.empty() || word[0] == '#') continue;
    words.push_back(std::move(word));
  }
  return Stoplist(std::move(words));
}

Stoplist load_stoplist(const std::string& path) {
  if (path.empty()) return parse_stoplist_text(kDefaultStoplistText);
  return Stoplist::load(path);
}

// Minimal CSV field splitter with double-quote support, for the roster file.
std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

void write_run_config(const std::filesystem::path& out_dir,
                      const std::string& command, const json& config) {
  json doc;
  doc["command"] = command;
  doc["config"] = config;
  std::filesystem::create_directories(out_dir);
  write_file(out_dir / ("run_config." + command + ".json"),
             doc.dump(2) + "\n");
}

// The corpus schema carries no explicit researcher->publication link; a
// record belongs to a researcher when the author matcher used at ingest time
// finds them in its author list.
std::vector<PublicationRecord> publications_for(const Corpus& corpus,
                                                const Researcher& researcher) {
  std::vector<PublicationRecord> out;
  for (const PublicationRecord& record : corpus.publications) {
    if (match_author_index(record, researcher.name)) out.push_back(record);
  }
  return out;
}

const ProfileDoc* find_profile(const Corpus& corpus, const std::string& id,
                               Variant variant) {
  for (const ProfileDoc& doc : corpus.profiles) {
    if (doc.researcher_id == id && doc.variant == variant) return &doc;
  }
  return nullptr;
}

// Deterministic worker pool; each index is processed exactly once and the
// body writes only to its own output slot.
void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

json rows_to_json(const std::vector<MetricRow>& rows) {
  json arr = json::array();
  for (const MetricRow& row : rows) {
    arr.push_back({{"family", row.family},
                   {"metric", row.metric},
                   {"variant", row.variant},
                   {"researcher_id", row.researcher_id},
                   {"value", row.value}});
  }
  return arr;
}

std::vector<MetricRow> rows_from_json(const json& doc,
                                      const std::string& origin) {
  if (!doc.contains("rows") || !doc.at("rows").is_array()) {
    throw DataError(origin + ": expected an object with a rows array");
  }
  std::vector<MetricRow> rows;
  for (const json& entry : doc.at("rows")) {
    MetricRow row;
    row.family = entry.at("family").get<std::string>();
    row.metric = entry.at("metric").get<std::string>();
    row.variant = entry.at("variant").get<std::string>();
    row.researcher_id = entry.at("researcher_id").get<std::string>();
    row.value = entry.at("value").get<double>();
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_rows(const std::filesystem::path& path,
                std::vector<MetricRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const MetricRow& a,
                                         const MetricRow& b) {
    return std::tie(a.family, a.metric, a.variant, a.researcher_id) <
           std::tie(b.family, b.metric, b.variant, b.researcher_id);
  });
  json doc;
  doc["format_version"] = 1;
  doc["rows"] = rows_to_json(rows);
  write_file(path, doc.dump(2) + "\n");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// ---------------------------------------------------------------- ingest --

struct IngestOptions {
  std::string roster;
  std::string out;
  std::string fixtures;
  int date_from = 0;
  int date_to = 0;
  std::string authorship_rule = "first3-or-last3";
  bool strict_names = false;
  int recency_years = 10;
  int reference_year = 0;
};

void cmd_ingest(const IngestOptions& opt) {
  if (opt.date_from > opt.date_to) {
    throw ConfigError("--date-from must not exceed --date-to");
  }
  if (opt.recency_years > 0 && opt.reference_year == 0) {
    throw ConfigError(
        "--reference-year is required unless --recency-years is 0");
  }
  AuthorshipRule rule = parse_authorship_rule(opt.authorship_rule);

  write_run_config(opt.out, "ingest",
                   {{"roster", opt.roster},
                    {"fixtures", opt.fixtures},
                    {"date_from", opt.date_from},
                    {"date_to", opt.date_to},
                    {"authorship_rule", opt.authorship_rule},
                    {"strict_names", opt.strict_names},
                    {"recency_years", opt.recency_years},
                    {"reference_year", opt.reference_year}});

  std::shared_ptr<HttpTransport> transport;
  if (opt.fixtures.empty()) {
    transport = std::make_shared<LiveTransport>();
  } else {
    transport = std::make_shared<FixtureTransport>(opt.fixtures);
  }
  std::optional<std::string> api_key;
  if (const char* key = std::getenv("NCBI_API_KEY")) {
    if (*key != '\0') api_key = key;
  }
  EutilsClient client(transport, FetchPolicy{}, nullptr, api_key);

  std::filesystem::path roster_path(opt.roster);
  std::filesystem::path roster_dir = roster_path.parent_path();
  Corpus corpus;
  std::set<std::string> seen_pmids;
  std::vector<std::string> lines = split(read_file(roster_path), '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    if (i == 0 && line.rfind("id,", 0) == 0) continue;  // header row
    std::vector<std::string> fields = csv_fields(line);
    if (fields.size() < 3) {
      throw DataError(opt.roster + " line " + std::to_string(i + 1) +
                      ": roster rows need id,name,affiliation");
    }
    Researcher researcher;
    researcher.id = trim(fields[0]);
    researcher.name = trim(fields[1]);
    researcher.affiliation = trim(fields[2]);
    if (fields.size() > 3 && !trim(fields[3]).empty()) {
      std::filesystem::path profile_path = trim(fields[3]);
      if (profile_path.is_relative()) profile_path = roster_dir / profile_path;
      researcher.human_profile = read_file(profile_path);
      // The human-written profile enters the corpus as a first-class
      // profile document so evaluation treats it like any other variant.
      ProfileDoc human_doc;
      human_doc.researcher_id = researcher.id;
      human_doc.variant = Variant::Human;
      human_doc.text = trim(*researcher.human_profile);
      human_doc.created_at = kFixedCreatedAt;
      corpus.profiles.push_back(std::move(human_doc));
    }

    std::size_t kept = 0;
    try {
      SearchQuery query;
      query.author_name = researcher.name;
      query.affiliation = researcher.affiliation;
      query.date_from = opt.date_from;
      query.date_to = opt.date_to;
      std::vector<std::string> pmids = client.search_pmids(query);
      std::vector<PublicationRecord> records = client.fetch_records(pmids);
      records =
          filter_by_authorship(records, researcher, rule, opt.strict_names);
      if (opt.recency_years > 0) {
        int dropped_no_year = 0;
        records = filter_by_recency(records, opt.recency_years,
                                    opt.reference_year, &dropped_no_year);
        if (dropped_no_year > 0) {
          warn(researcher.id + ": dropped " +
               std::to_string(dropped_no_year) + " records with no year");
        }
      }
      kept = records.size();
      for (PublicationRecord& record : records) {
        if (seen_pmids.insert(record.pmid).second) {
          corpus.publications.push_back(std::move(record));
        }
      }
    } catch (const Error& e) {
      // One researcher failing must not sink the batch.
      warn(researcher.id + ": " + e.what());
    }
    if (kept == 0) warn(researcher.id + ": 0 publications kept");
    std::cout << researcher.id << "\t" << researcher.name << "\t" << kept
              << " publications\n";
    corpus.researchers.push_back(std::move(researcher));
  }
  save_corpus(corpus, std::filesystem::path(opt.out) / "corpus.jsonl");
}

// ---------------------------------------------------------------- topics --

struct TopicsOptions {
  std::string corpus;
  std::string out;
  int topics = 30;
  double alpha = -1.0;
  double beta = 0.01;
  int iterations = 500;
  std::uint64_t seed = 0;
  std::string stoplist;
};

void cmd_topics(const TopicsOptions& opt) {
  write_run_config(opt.out, "topics",
                   {{"corpus", opt.corpus},
                    {"topics", opt.topics},
                    {"alpha", opt.alpha},
                    {"beta", opt.beta},
                    {"iterations", opt.iterations},
                    {"seed", opt.seed},
                    {"stoplist", opt.stoplist}});
  Corpus corpus = load_corpus(opt.corpus);
  Stoplist stoplist = load_stoplist(opt.stoplist);

  std::vector<TokenizedDoc> docs;
  docs.reserve(corpus.publications.size());
  for (const PublicationRecord& record : corpus.publications) {
    TokenizedDoc doc;
    doc.tokens = remove_stopwords(tokenize(record.abstract_text), stoplist);
    docs.push_back(std::move(doc));
  }

  LdaParams params;
  params.num_topics = opt.topics;
  params.alpha = opt.alpha;
  params.beta = opt.beta;
  params.iterations = opt.iterations;
  params.seed = opt.seed;
  LdaModel model = fit_lda(docs, params);

  std::filesystem::path out_dir(opt.out);
  save_lda(model, out_dir / "model.json");
  json doc_index;
  json pmids = json::array();
  for (const PublicationRecord& record : corpus.publications) {
    pmids.push_back(record.pmid);
  }
  doc_index["pmids"] = std::move(pmids);
  write_file(out_dir / "doc_index.json", doc_index.dump(2) + "\n");

  std::map<std::string, std::vector<TopicAssignment>> by_researcher;
  std::map<std::string, std::map<int, std::vector<double>>> heatmaps;
  std::vector<MetricRow> rows;
  std::string diversity_csv = "researcher_id,publications,diversity,band\n";
  for (const Researcher& researcher : corpus.researchers) {
    std::vector<TopicAssignment> assignments;
    for (std::size_t d = 0; d < corpus.publications.size(); ++d) {
      if (docs[d].tokens.empty()) continue;
      if (!match_author_index(corpus.publications[d], researcher.name)) {
        continue;
      }
      TopicAssignment assignment;
      assignment.researcher_id = researcher.id;
      assignment.pmid = corpus.publications[d].pmid;
      assignment.year = corpus.publications[d].year;
      assignment.dominant_topic = dominant_topic(model, d);
      assignments.push_back(std::move(assignment));
    }
    if (assignments.empty()) {
      warn(researcher.id + ": no topic assignments (no usable abstracts)");
      continue;
    }
    double diversity = diversity_score(assignments);
    DiversityBand band = diversity_band(diversity);
    diversity_csv += researcher.id + "," +
                     std::to_string(assignments.size()) + "," +
                     format_double(diversity) + "," +
                     std::string(diversity_band_name(band)) + "\n";
    rows.push_back({"topics", "diversity", "Publications", researcher.id,
                    diversity});
    heatmaps[researcher.id] = year_heatmap(assignments, model.num_topics);
    by_researcher[researcher.id] = std::move(assignments);
    std::cout << researcher.id << "\t" << format_double(diversity) << "\t"
              << diversity_band_name(band) << "\n";
  }
  write_file(out_dir / "diversity.csv", diversity_csv);
  write_file(out_dir / "heatmap.csv", heatmap_csv(heatmaps, model.num_topics));
  write_file(out_dir / "transitions.csv",
             transition_csv(by_researcher, model.num_topics));
  if (!rows.empty()) write_rows(out_dir / "topic_metrics.json", rows);
}

// -------------------------------------------------------------- generate --

struct GenerateOptions {
  std::string corpus;
  std::string out;
  std::string provider;
  std::string strategy;
  std::string mesh_vocab;
  std::string model;
  std::string templates;
  std::string example_id;
  std::string created_at = kFixedCreatedAt;
  int budget = 0;
  int max_output_tokens = 1024;
};

std::vector<std::string> collect_mesh_terms(
    const std::vector<PublicationRecord>& records) {
  std::vector<std::string> terms;
  std::set<std::string> seen;
  for (const PublicationRecord& record : records) {
    for (const std::string& term : record.mesh_terms) {
      std::string key = term;
      for (char& c : key) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
      if (seen.insert(key).second) terms.push_back(term);
    }
  }
  return terms;
}

OneShotExample build_example(const Corpus& corpus, Strategy strategy,
                             const std::string& example_id) {
  const Researcher* exemplar = nullptr;
  if (!example_id.empty()) {
    for (const Researcher& r : corpus.researchers) {
      if (r.id == example_id) exemplar = &r;
    }
    if (!exemplar || !exemplar->human_profile) {
      throw ConfigError("--example-id " + example_id +
                        " does not name a researcher with a human profile");
    }
  } else {
    for (const Researcher& r : corpus.researchers) {
      if (r.human_profile) {
        exemplar = &r;
        break;
      }
    }
  }
  OneShotExample example;
  example.instructions = kExampleInstructions;
  if (!exemplar) {
    example.source_material =
        "- machine learning\n- electronic health records";
    example.exemplar_profile =
        "Dr. Rivera studies machine learning methods for electronic health "
        "records, focusing on risk prediction models that remain reliable "
        "across care settings.";
    return example;
  }
  example.exemplar_profile = *exemplar->human_profile;
  std::vector<PublicationRecord> pubs = publications_for(corpus, *exemplar);
  if (strategy == Strategy::AbstractBased) {
    for (const PublicationRecord& record : pubs) {
      if (!record.abstract_text.empty()) {
        example.source_material = record.abstract_text;
        break;
      }
    }
  } else {
    std::vector<std::string> terms = collect_mesh_terms(pubs);
    if (terms.size() > 15) terms.resize(15);
    std::string bullets;
    for (const std::string& term : terms) {
      if (!bullets.empty()) bullets += "\n";
      bullets += "- " + term;
    }
    example.source_material = bullets;
  }
  if (example.source_material.empty()) {
    example.source_material = "- machine learning\n- electronic health records";
  }
  return example;
}

void cmd_generate(const GenerateOptions& opt) {
  Strategy strategy;
  if (opt.strategy == "mesh") {
    strategy = Strategy::MeshBased;
  } else if (opt.strategy == "abstract") {
    strategy = Strategy::AbstractBased;
  } else if (opt.strategy == "paraphrase") {
    strategy = Strategy::Paraphrase;
  } else {
    throw ConfigError("--strategy must be mesh, abstract or paraphrase");
  }
  write_run_config(opt.out, "generate",
                   {{"corpus", opt.corpus},
                    {"provider", opt.provider},
                    {"strategy", opt.strategy},
                    {"mesh_vocab", opt.mesh_vocab},
                    {"model", opt.model},
                    {"templates", opt.templates},
                    {"example_id", opt.example_id},
                    {"created_at", opt.created_at},
                    {"budget", opt.budget},
                    {"max_output_tokens", opt.max_output_tokens}});

  Corpus corpus = load_corpus(opt.corpus);
  std::unique_ptr<LlmProvider> provider = load_provider(opt.provider);
  TemplateSet templates = opt.templates.empty()
                              ? TemplateSet::builtin()
                              : TemplateSet::load(opt.templates);
  const int budget =
      opt.budget > 0 ? opt.budget : provider->context_limit_tokens();

  MeshVocabulary vocab;
  if (strategy == Strategy::MeshBased) {
    if (opt.mesh_vocab.empty()) {
      throw ConfigError("--mesh-vocab is required for the mesh strategy");
    }
    vocab = MeshVocabulary::load(opt.mesh_vocab);
  }
  LdaModel model;
  std::map<std::string, std::size_t> pmid_to_index;
  if (strategy == Strategy::AbstractBased) {
    if (opt.model.empty()) {
      throw ConfigError("--model is required for the abstract strategy");
    }
    model = load_lda(opt.model);
    std::filesystem::path index_path =
        std::filesystem::path(opt.model).parent_path() / "doc_index.json";
    json doc_index;
    try {
      doc_index = json::parse(read_file(index_path));
    } catch (const json::exception& e) {
      throw DataError(index_path.string() + ": " + e.what());
    }
    const json& pmids = doc_index.at("pmids");
    for (std::size_t i = 0; i < pmids.size(); ++i) {
      pmid_to_index[pmids.at(i).get<std::string>()] = i;
    }
  }
  OneShotExample example = build_example(corpus, strategy, opt.example_id);

  std::size_t generated = 0;
  for (const Researcher& researcher : corpus.researchers) {
    try {
      PromptPlan plan;
      if (strategy == Strategy::MeshBased) {
        std::vector<PublicationRecord> pubs =
            publications_for(corpus, researcher);
        MeshSplit mesh_split =
            categorize_mesh_terms(collect_mesh_terms(pubs), vocab);
        plan = build_mesh_plan(researcher, mesh_split, example, templates,
                               budget);
      } else if (strategy == Strategy::AbstractBased) {
        std::vector<PublicationRecord> pubs =
            publications_for(corpus, researcher);
        std::vector<std::size_t> doc_to_model_index;
        doc_to_model_index.reserve(pubs.size());
        for (const PublicationRecord& record : pubs) {
          auto it = pmid_to_index.find(record.pmid);
          if (it == pmid_to_index.end()) {
            throw DataError("pmid " + record.pmid +
                            " is missing from the topic model doc index");
          }
          doc_to_model_index.push_back(it->second);
        }
        std::vector<std::string> warnings;
        plan = build_abstract_plan(researcher, pubs, model, doc_to_model_index,
                                   example, templates, budget, TokenCounter(),
                                   &warnings);
        for (const std::string& w : warnings) warn(researcher.id + ": " + w);
      } else {
        if (!researcher.human_profile) {
          throw DataError("researcher " + researcher.id +
                          " has no human profile");
        }
        plan = build_paraphrase_plan(researcher, *researcher.human_profile,
                                     templates, budget);
      }
      ProfileDoc doc =
          run_plan(*provider, plan, opt.created_at, opt.max_output_tokens);
      std::erase_if(corpus.profiles, [&](const ProfileDoc& existing) {
        return existing.researcher_id == doc.researcher_id &&
               existing.variant == doc.variant;
      });
      corpus.profiles.push_back(std::move(doc));
      ++generated;
    } catch (const DataError& e) {
      warn(std::string(e.what()) + "; skipped");
    }
  }
  save_corpus(corpus, std::filesystem::path(opt.out) / "corpus.jsonl");
  std::cout << opt.strategy << "\t" << generated << " profiles\n";
}

// -------------------------------------------------------------- evaluate --

struct EvaluateOptions {
  std::string corpus;
  std::string out;
  std::string metrics = "lexical,divergence";
  std::string kl_direction = "machine-vs-human";
  std::string stoplist;
  std::string synonyms;
  std::string mesh_vocab;
  std::string embeddings_dir;
  std::string conllu_dir;
  int jobs = 1;
};

struct ProfilePair {
  const Researcher* researcher;
  const ProfileDoc* human;
  const ProfileDoc* machine;
};

std::vector<ProfilePair> machine_human_pairs(const Corpus& corpus) {
  std::vector<ProfilePair> pairs;
  for (const Researcher& researcher : corpus.researchers) {
    const ProfileDoc* human =
        find_profile(corpus, researcher.id, Variant::Human);
    if (!human) continue;
    for (Variant variant : kMachineVariants) {
      const ProfileDoc* machine =
          find_profile(corpus, researcher.id, variant);
      if (machine) pairs.push_back({&researcher, human, machine});
    }
  }
  return pairs;
}

void eval_lexical(const Corpus& corpus, const SynonymTable& synonyms, int jobs,
                  std::vector<MetricRow>* rows) {
  std::vector<ProfilePair> pairs = machine_human_pairs(corpus);
  std::vector<LexicalScores> scores(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    scores[i] = lexical_scores(tokenize(pairs[i].machine->text),
                               tokenize(pairs[i].human->text), synonyms);
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string variant(variant_name(pairs[i].machine->variant));
    const std::string& id = pairs[i].researcher->id;
    rows->push_back({"lexical", "rouge_l_precision", variant, id,
                     scores[i].rouge_l.precision});
    rows->push_back({"lexical", "rouge_l_recall", variant, id,
                     scores[i].rouge_l.recall});
    rows->push_back({"lexical", "rouge_l_f1", variant, id,
                     scores[i].rouge_l.f1});
    rows->push_back({"lexical", "bleu", variant, id, scores[i].bleu});
    rows->push_back({"lexical", "meteor", variant, id, scores[i].meteor});
  }
}

void eval_divergence(const Corpus& corpus, const Stoplist& stoplist,
                     const MeshVocabulary& vocab, KlDirection direction,
                     const std::filesystem::path& out_dir,
                     std::vector<MetricRow>* rows) {
  if (corpus.profiles.size() < 2) {
    throw DataError("divergence needs at least two profiles in the corpus");
  }
  std::vector<TokenizedDoc> docs;
  docs.reserve(corpus.profiles.size());
  for (const ProfileDoc& profile : corpus.profiles) {
    TokenizedDoc doc;
    doc.tokens = tokenize(profile.text);
    doc.source_variant = profile.variant;
    docs.push_back(std::move(doc));
  }
  std::vector<TfIdfVector> vectors = tfidf_corpus(docs, stoplist);
  std::map<std::pair<std::string, Variant>, std::size_t> index;
  for (std::size_t i = 0; i < corpus.profiles.size(); ++i) {
    index[{corpus.profiles[i].researcher_id, corpus.profiles[i].variant}] = i;
  }

  std::string csv =
      "researcher_id,variant_pair,kl_nats,unique_term_count,mesh_novel_count\n";
  for (const Researcher& researcher : corpus.researchers) {
    auto human_it = index.find({researcher.id, Variant::Human});
    if (human_it == index.end()) continue;
    const TfIdfVector& human_vec = vectors[human_it->second];
    std::vector<std::string> human_tokens = remove_stopwords(
        tokenize(corpus.profiles[human_it->second].text), stoplist);
    for (Variant variant : kMachineVariants) {
      auto machine_it = index.find({researcher.id, variant});
      if (machine_it == index.end()) continue;
      const TfIdfVector& machine_vec = vectors[machine_it->second];
      double kl = direction == KlDirection::MachineVsHuman
                      ? kl_between_docs(machine_vec, human_vec)
                      : kl_between_docs(human_vec, machine_vec);
      // Novelty is always read from the human side: terms the researcher
      // wrote that the machine text never produced.
      std::set<std::string> unique = unique_terms(human_vec, machine_vec);
      std::vector<std::string> novel =
          mesh_novelty(unique, human_tokens, vocab);
      std::string pair_label =
          direction == KlDirection::MachineVsHuman
              ? std::string(variant_name(variant)) + "_vs_Human"
              : "Human_vs_" + std::string(variant_name(variant));
      rows->push_back({"divergence", "kl_nats", pair_label, researcher.id, kl});
      rows->push_back({"divergence", "unique_term_count", pair_label,
                       researcher.id, static_cast<double>(unique.size())});
      rows->push_back({"divergence", "mesh_novel_count", pair_label,
                       researcher.id, static_cast<double>(novel.size())});
      csv += researcher.id + "," + pair_label + "," + format_double(kl) + "," +
             std::to_string(unique.size()) + "," +
             std::to_string(novel.size()) + "\n";
    }
  }
  write_file(out_dir / "divergence.csv", csv);
}

void eval_semantic(const Corpus& corpus,
                   const std::filesystem::path& embeddings_dir, int jobs,
                   std::vector<MetricRow>* rows) {
  struct Task {
    const Researcher* researcher;
    Variant variant;
    std::filesystem::path candidate;
    std::filesystem::path reference;
  };
  std::vector<Task> tasks;
  for (const Researcher& researcher : corpus.researchers) {
    std::filesystem::path reference =
        embeddings_dir / (researcher.id + ".Human.json");
    if (!std::filesystem::exists(reference)) continue;
    for (Variant variant : kMachineVariants) {
      std::filesystem::path candidate =
          embeddings_dir /
          (researcher.id + "." + std::string(variant_name(variant)) + ".json");
      if (!std::filesystem::exists(candidate)) continue;
      tasks.push_back({&researcher, variant, candidate, reference});
    }
  }
  std::vector<SemanticScores> scores(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    scores[i] = greedy_match_score(load_embeddings(tasks[i].candidate),
                                   load_embeddings(tasks[i].reference));
  });
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string variant(variant_name(tasks[i].variant));
    const std::string& id = tasks[i].researcher->id;
    rows->push_back({"semantic", "precision", variant, id,
                     scores[i].precision});
    rows->push_back({"semantic", "recall", variant, id, scores[i].recall});
    rows->push_back({"semantic", "f1", variant, id, scores[i].f1});
  }
}

void eval_syntactic(const Corpus& corpus,
                    const std::filesystem::path& conllu_dir, int jobs,
                    std::vector<MetricRow>* rows) {
  struct Task {
    const Researcher* researcher;
    Variant variant;
    std::filesystem::path file;
  };
  const Variant all_variants[] = {Variant::Human, Variant::MeshGen,
                                  Variant::AbstractGen, Variant::Paraphrase};
  std::vector<Task> tasks;
  for (const Researcher& researcher : corpus.researchers) {
    for (Variant variant : all_variants) {
      std::filesystem::path file =
          conllu_dir /
          (researcher.id + "." + std::string(variant_name(variant)) +
           ".conllu");
      if (std::filesystem::exists(file)) {
        tasks.push_back({&researcher, variant, file});
      }
    }
  }
  std::vector<SyntacticReport> reports(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    reports[i] = syntactic_report({load_conllu(tasks[i].file)});
  });
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string variant(variant_name(tasks[i].variant));
    const std::string& id = tasks[i].researcher->id;
    rows->push_back({"syntactic", "max_dep_depth", variant, id,
                     reports[i].max_dep_depth});
    rows->push_back({"syntactic", "complexity", variant, id,
                     reports[i].syntactic_complexity});
    rows->push_back({"syntactic", "ambiguity", variant, id,
                     reports[i].syntactic_ambiguity});
  }
}

void cmd_evaluate(const EvaluateOptions& opt) {
  std::set<std::string> families;
  for (const std::string& family : split(opt.metrics, ',')) {
    std::string name = trim(family);
    if (name.empty()) continue;
    if (name != "lexical" && name != "divergence" && name != "semantic" &&
        name != "syntactic") {
      throw ConfigError("unknown metric family \"" + name + "\"");
    }
    families.insert(name);
  }
  if (families.empty()) throw ConfigError("--metrics selected no families");
  if (families.count("divergence") && opt.mesh_vocab.empty()) {
    throw ConfigError("--mesh-vocab is required for the divergence family");
  }
  if (families.count("semantic") && opt.embeddings_dir.empty()) {
    throw ConfigError("--embeddings-dir is required for the semantic family");
  }
  if (families.count("syntactic") && opt.conllu_dir.empty()) {
    throw ConfigError("--conllu-dir is required for the syntactic family");
  }
  if (opt.jobs < 1) throw ConfigError("--jobs must be at least 1");

  write_run_config(opt.out, "evaluate",
                   {{"corpus", opt.corpus},
                    {"metrics", opt.metrics},
                    {"kl_direction", opt.kl_direction},
                    {"stoplist", opt.stoplist},
                    {"synonyms", opt.synonyms},
                    {"mesh_vocab", opt.mesh_vocab},
                    {"embeddings_dir", opt.embeddings_dir},
                    {"conllu_dir", opt.conllu_dir},
                    {"jobs", opt.jobs}});

  Corpus corpus = load_corpus(opt.corpus);
  std::filesystem::path out_dir(opt.out);
  std::vector<MetricRow> rows;
  if (families.count("lexical")) {
    SynonymTable synonyms;
    if (!opt.synonyms.empty()) synonyms = SynonymTable::load(opt.synonyms);
    eval_lexical(corpus, synonyms, opt.jobs, &rows);
  }
  if (families.count("divergence")) {
    eval_divergence(corpus, load_stoplist(opt.stoplist),
                    MeshVocabulary::load(opt.mesh_vocab),
                    parse_kl_direction(opt.kl_direction), out_dir, &rows);
  }
  if (families.count("semantic")) {
    eval_semantic(corpus, opt.embeddings_dir, opt.jobs, &rows);
  }
  if (families.count("syntactic")) {
    eval_syntactic(corpus, opt.conllu_dir, opt.jobs, &rows);
  }
  write_rows(out_dir / "metrics.json", rows);
  std::cout << rows.size() << " metric rows\n";
}

// -------------------------------------------------------------- humaneval --

struct HumanevalOptions {
  std::string ratings;
  std::string out;
};

void cmd_humaneval(const HumanevalOptions& opt) {
  const char* table_names[] = {"self", "mesh", "abstract"};
  std::vector<RatingRecord> records;
  std::size_t tables_loaded = 0;
  for (const char* name : table_names) {
    std::filesystem::path file =
        std::filesystem::path(opt.ratings) / (std::string(name) + ".csv");
    if (!std::filesystem::exists(file)) continue;
    std::vector<RatingRecord> table = load_ratings(file);
    records.insert(records.end(), table.begin(), table.end());
    ++tables_loaded;
  }
  if (tables_loaded == 0) {
    throw DataError("no ratings tables found under " + opt.ratings +
                    " (expected self.csv, mesh.csv or abstract.csv)");
  }

  const std::string pooling =
      "overall-impression labels pooled into one item per (faculty, variant) "
      "across all loaded tables";
  AgreementResult pooled = gwet_ac1(pool_overall_items(records), 5);
  std::cout << "pooled overall AC1 = " << format_double(pooled.ac1) << " (pa "
            << format_double(pooled.pa) << ", pe " << format_double(pooled.pe)
            << ", items " << pooled.n_items << ")\n";

  json agreement;
  agreement["pooled"] = {{"ac1", pooled.ac1},
                         {"pa", pooled.pa},
                         {"pe", pooled.pe},
                         {"items", pooled.n_items},
                         {"raters", pooled.n_raters},
                         {"categories", pooled.n_categories},
                         {"pooling", pooling}};
  json bands = json::object();
  const AgreementBand all_bands[] = {AgreementBand::Low, AgreementBand::Middle,
                                     AgreementBand::High};
  for (AgreementBand band : all_bands) {
    std::string name(band_name(band));
    try {
      AgreementResult result = stratified_ac1(records, band);
      bands[name] = {{"ac1", result.ac1},
                     {"pa", result.pa},
                     {"pe", result.pe},
                     {"items", result.n_items}};
      std::cout << "band " << name << " AC1 = " << format_double(result.ac1)
                << " (items " << result.n_items << ")\n";
    } catch (const DataError&) {
      bands[name] = nullptr;
      std::cout << "band " << name << " AC1 = n/a (no items)\n";
    }
  }
  agreement["bands"] = std::move(bands);

  json summaries = json::object();
  json identified = json::object();
  std::set<Variant> variants_present;
  for (const RatingRecord& record : records) variants_present.insert(record.variant);
  for (Variant variant : variants_present) {
    std::string name(variant_name(variant));
    std::map<std::string, double> summary =
        summary_percentages(records, variant);
    json dims = json::object();
    std::cout << "variant " << name << ":";
    for (const char* dimension : kRatingDimensions) {
      dims[dimension] = summary.at(dimension);
      std::cout << " " << dimension << "=" << format_double(summary.at(dimension));
    }
    double human_fraction = identified_as_human_fraction(records, variant);
    identified[name] = human_fraction;
    std::cout << " identified_as_human=" << format_double(human_fraction)
              << "\n";
    summaries[name] = std::move(dims);
  }
  agreement["summary"] = std::move(summaries);
  agreement["identified_as_human"] = std::move(identified);
  agreement["notes"] = json::array(
      {"pooled overall AC1 = " + format_double(pooled.ac1) + " under " +
       pooling});

  if (!opt.out.empty()) {
    write_run_config(opt.out, "humaneval", {{"ratings", opt.ratings}});
    write_file(std::filesystem::path(opt.out) / "agreement.json",
               agreement.dump(2) + "\n");
  }
}

// ---------------------------------------------------------------- report --

struct ReportOptions {
  std::vector<std::string> inputs;
  std::string out;
  std::vector<std::string> notes;
};

void cmd_report(const ReportOptions& opt) {
  json config;
  config["inputs"] = opt.inputs;
  config["notes"] = opt.notes;
  write_run_config(opt.out, "report", config);

  std::vector<MetricRow> rows;
  for (const std::string& input : opt.inputs) {
    json doc;
    try {
      doc = json::parse(read_file(input));
    } catch (const json::exception& e) {
      throw DataError(input + ": " + e.what());
    }
    std::vector<MetricRow> file_rows = rows_from_json(doc, input);
    rows.insert(rows.end(), file_rows.begin(), file_rows.end());
  }
  MetricReport report = build_report(std::move(rows), opt.notes);
  emit_report(report, opt.out);

  std::cout << report.rows.size() << " rows across";
  for (const std::string& family : report_families(report)) {
    std::cout << " " << family;
  }
  std::cout << "\n";
  for (const TestOutcome& test : report.tests) {
    std::cout << test.family << "/" << test.metric << " " << test.variant_a
              << " vs " << test.variant_b << ": ";
    if (test.degenerate) {
      std::cout << "degenerate (zero-variance differences)\n";
    } else {
      std::cout << "t=" << format_double(test.result.t_statistic)
                << " p=" << format_double(test.result.p_value) << " "
                << stars_label(test.result.stars) << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"researcher profile generation and evaluation"};
  app.require_subcommand(1);

  IngestOptions ingest_opt;
  CLI::App* ingest = app.add_subcommand(
      "ingest", "search and fetch PubMed records for a researcher roster");
  ingest->add_option("--roster", ingest_opt.roster,
                     "roster CSV: id,name,affiliation[,human_profile_path]")
      ->required();
  ingest->add_option("--out", ingest_opt.out, "output directory")->required();
  ingest->add_option("--fixtures", ingest_opt.fixtures,
                     "replay transport from recorded fixtures");
  ingest->add_option("--date-from", ingest_opt.date_from, "publication year lower bound")
      ->required();
  ingest->add_option("--date-to", ingest_opt.date_to, "publication year upper bound")
      ->required();
  ingest->add_option("--authorship-rule", ingest_opt.authorship_rule,
                     "first3-or-last3 | first3-or-senior");
  ingest->add_flag("--strict-names", ingest_opt.strict_names,
                   "require full fore-name match");
  ingest->add_option("--recency-years", ingest_opt.recency_years,
                     "keep records newer than this window (0 disables)");
  ingest->add_option("--reference-year", ingest_opt.reference_year,
                     "recency window anchor year");

  TopicsOptions topics_opt;
  CLI::App* topics = app.add_subcommand(
      "topics", "fit the topic model and export diversity analyses");
  topics->add_option("--corpus", topics_opt.corpus, "corpus.jsonl")->required();
  topics->add_option("--out", topics_opt.out, "output directory")->required();
  topics->add_option("--topics", topics_opt.topics, "topic count");
  topics->add_option("--alpha", topics_opt.alpha,
                     "doc-topic prior (<= 0 means 50/K)");
  topics->add_option("--beta", topics_opt.beta, "topic-word prior");
  topics->add_option("--iters", topics_opt.iterations, "Gibbs sweeps");
  topics->add_option("--seed", topics_opt.seed, "sampler seed");
  topics->add_option("--stoplist", topics_opt.stoplist,
                     "stoplist file (default: built-in English list)");

  GenerateOptions generate_opt;
  CLI::App* generate = app.add_subcommand(
      "generate", "generate profiles with an LLM provider");
  generate->add_option("--corpus", generate_opt.corpus, "corpus.jsonl")
      ->required();
  generate->add_option("--out", generate_opt.out, "output directory")
      ->required();
  generate->add_option("--provider", generate_opt.provider,
                       "provider config JSON")
      ->required();
  generate->add_option("--strategy", generate_opt.strategy,
                       "mesh | abstract | paraphrase")
      ->required();
  generate->add_option("--mesh-vocab", generate_opt.mesh_vocab,
                       "descriptor vocabulary (mesh strategy)");
  generate->add_option("--model", generate_opt.model,
                       "fitted topic model (abstract strategy)");
  generate->add_option("--templates", generate_opt.templates,
                       "prompt template directory (default: built-in v1)");
  generate->add_option("--example-id", generate_opt.example_id,
                       "researcher to use as the one-shot exemplar");
  generate->add_option("--created-at", generate_opt.created_at,
                       "timestamp stored on generated profiles");
  generate->add_option("--budget", generate_opt.budget,
                       "per-stage token budget (default: provider limit)");
  generate->add_option("--max-output-tokens", generate_opt.max_output_tokens,
                       "completion cap per stage");

  EvaluateOptions evaluate_opt;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "compute metric families over the corpus profiles");
  evaluate->add_option("--corpus", evaluate_opt.corpus, "corpus.jsonl")
      ->required();
  evaluate->add_option("--out", evaluate_opt.out, "output directory")
      ->required();
  evaluate->add_option("--metrics", evaluate_opt.metrics,
                       "comma list: lexical,divergence,semantic,syntactic");
  evaluate->add_option("--kl-direction", evaluate_opt.kl_direction,
                       "machine-vs-human | human-vs-machine");
  evaluate->add_option("--stoplist", evaluate_opt.stoplist,
                       "stoplist file (default: built-in English list)");
  evaluate->add_option("--synonyms", evaluate_opt.synonyms,
                       "synonym table for the meteor synonym stage");
  evaluate->add_option("--mesh-vocab", evaluate_opt.mesh_vocab,
                       "descriptor vocabulary (divergence family)");
  evaluate->add_option("--embeddings-dir", evaluate_opt.embeddings_dir,
                       "token embedding files (semantic family)");
  evaluate->add_option("--conllu-dir", evaluate_opt.conllu_dir,
                       "dependency parses (syntactic family)");
  evaluate->add_option("--jobs", evaluate_opt.jobs, "worker thread count");

  HumanevalOptions humaneval_opt;
  CLI::App* humaneval = app.add_subcommand(
      "humaneval", "inter-rater agreement over Likert rating tables");
  humaneval->add_option("--ratings", humaneval_opt.ratings,
                        "directory with self.csv/mesh.csv/abstract.csv")
      ->required();
  humaneval->add_option("--out", humaneval_opt.out,
                        "output directory for agreement.json");

  ReportOptions report_opt;
  CLI::App* report = app.add_subcommand(
      "report", "aggregate metric rows, run paired tests, emit report files");
  report->add_option("inputs", report_opt.inputs, "metric row JSON files")
      ->required();
  report->add_option("--out", report_opt.out, "output directory")->required();
  report->add_option("--note", report_opt.notes,
                     "free-form note recorded in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    json err = {{"error", {{"kind", "config"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 2;
  }

  try {
    if (ingest->parsed()) cmd_ingest(ingest_opt);
    if (topics->parsed()) cmd_topics(topics_opt);
    if (generate->parsed()) cmd_generate(generate_opt);
    if (evaluate->parsed()) cmd_evaluate(evaluate_opt);
    if (humaneval->parsed()) cmd_humaneval(humaneval_opt);
    if (report->parsed()) cmd_report(report_opt);
  } catch (const ConfigError& e) {
    json err = {{"error", {{"kind", "config"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const DataError& e) {
    json err = {{"error", {{"kind", "data"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 3;
  } catch (const TransportError& e) {
    json err = {{"error", {{"kind", "transport"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 4;
  } catch (const std::exception& e) {
    json err = {{"error", {{"kind", "internal"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
