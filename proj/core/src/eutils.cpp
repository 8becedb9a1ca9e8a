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

#include "profkit/eutils.hpp"

#include <httplib.h>

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

#include "profkit/errors.hpp"
#include "profkit/util.hpp"
#include "profkit/xml.hpp"

namespace profkit {

namespace {

constexpr const char* kBaseUrl = "https://eutils.ncbi.nlm.nih.gov/entrez/eutils";

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

FixtureTransport::FixtureTransport(std::filesystem::path dir)
    : dir_(std::move(dir)) {}

std::string FixtureTransport::get(const std::string& url) {
  std::string digest = sha256_hex(url);
  std::filesystem::path file = dir_ / (digest + ".xml");
  if (!std::filesystem::exists(file)) {
    throw TransportError("no fixture recorded for " + url + " (expected " +
                         file.string() + ")");
  }
  return read_file(file);
}

std::string LiveTransport::get(const std::string& url) {
  std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw TransportError("malformed url: " + url);
  }
  std::size_t host_start = scheme_end + 3;
  std::size_t path_start = url.find('/', host_start);
  std::string base = path_start == std::string::npos
                         ? url
                         : url.substr(0, path_start);
  std::string path =
      path_start == std::string::npos ? "/" : url.substr(path_start);
  httplib::Client client(base);
  client.set_connection_timeout(30);
  client.set_read_timeout(60);
  auto res = client.Get(path);
  if (!res) {
    throw TransportError("request failed for " + url + ": " +
                         httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw TransportError("HTTP " + std::to_string(res->status) + " for " + url);
  }
  return res->body;
}

EutilsClient::EutilsClient(std::shared_ptr<HttpTransport> transport,
                           FetchPolicy policy, std::shared_ptr<Clock> clock,
                           std::optional<std::string> api_key)
    : transport_(std::move(transport)),
      policy_(policy),
      clock_(clock ? std::move(clock) : std::make_shared<SystemClock>()),
      api_key_(std::move(api_key)) {
  if (policy_.batch_size < 1 || policy_.batch_size > 200) {
    throw ConfigError("batch_size must be in [1, 200]");
  }
  double rate = policy_.max_requests_per_second;
  // An API key lifts NCBI's cap from 3 to 10; honor that automatically when
  // the caller kept the default.
  if (api_key_ && rate == 3.0) rate = 10.0;
  limiter_ = std::make_unique<RateLimiter>(rate, *clock_);
}

std::string EutilsClient::esearch_url(const SearchQuery& query, int retstart,
                                      int retmax) const {
  std::string term = query.author_name + "[Author]";
  if (!query.affiliation.empty()) {
    term += " AND (" + query.affiliation + "[Affiliation])";
  }
  std::string url = std::string(kBaseUrl) + "/esearch.fcgi?db=pubmed&term=" +
                    url_encode(term) + "&retstart=" + std::to_string(retstart) +
                    "&retmax=" + std::to_string(retmax) + "&datetype=pdat" +
                    "&mindate=" + std::to_string(query.date_from) +
                    "&maxdate=" + std::to_string(query.date_to);
  if (api_key_) url += "&api_key=" + url_encode(*api_key_);
  return url;
}

std::string EutilsClient::efetch_url(const std::vector<std::string>& batch) const {
  std::string ids = join(batch, ",");
  std::string url = std::string(kBaseUrl) + "/efetch.fcgi?db=pubmed&id=" + ids +
                    "&retmode=xml";
  if (api_key_) url += "&api_key=" + url_encode(*api_key_);
  return url;
}

std::string EutilsClient::get_with_retry(const std::string& url) {
  int attempts = policy_.retries + 1;
  for (int attempt = 1;; ++attempt) {
    limiter_->acquire();
    try {
      return transport_->get(url);
    } catch (const TransportError&) {
      if (attempt >= attempts) throw;
    }
  }
}

EsearchPage parse_esearch_response(std::string_view xml) {
  auto root = parse_xml(xml);
  if (root->name != "eSearchResult") {
    throw DataError("unexpected esearch root element <" + root->name + ">");
  }
  const XmlNode* count = root->child("Count");
  if (count == nullptr) {
    throw DataError("esearch response missing eSearchResult/Count");
  }
  EsearchPage page;
  page.count = std::stoi(count->text);
  if (const XmlNode* ids = root->child("IdList")) {
    for (const XmlNode* id : ids->children_named("Id")) {
      page.ids.push_back(trim(id->text));
    }
  }
  return page;
}

std::vector<std::string> EutilsClient::search_pmids(const SearchQuery& query) {
  if (query.author_name.empty()) {
    throw ConfigError("search query needs an author name");
  }
  if (query.date_from > query.date_to) {
    throw ConfigError("search query date range is inverted");
  }
  std::vector<std::string> all_ids;
  int retstart = 0;
  while (true) {
    std::string body =
        get_with_retry(esearch_url(query, retstart, policy_.batch_size));
    EsearchPage page = parse_esearch_response(body);
    all_ids.insert(all_ids.end(), page.ids.begin(), page.ids.end());
    if (static_cast<int>(all_ids.size()) >= page.count) break;
    if (page.ids.empty()) {
      throw DataError("esearch pagination ended early: got " +
                      std::to_string(all_ids.size()) + " of " +
                      std::to_string(page.count) + " ids");
    }
    retstart += static_cast<int>(page.ids.size());
  }
  return all_ids;
}

namespace {

int year_from_pubdate(const XmlNode& pub_date) {
  if (const XmlNode* year = pub_date.child("Year")) {
    std::string y = trim(year->text);
    if (y.size() >= 4 && digits_only(y.substr(0, 4))) {
      return std::stoi(y.substr(0, 4));
    }
  }
  // MedlineDate (or free-form content): first 4-digit run wins.
  std::string text = pub_date.deep_text();
  for (std::size_t i = 0; i + 4 <= text.size(); ++i) {
    if (digits_only(std::string_view(text).substr(i, 4))) {
      if (i + 4 < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[i + 4]))) {
        continue;  // part of a longer digit run; not a year
      }
      return std::stoi(text.substr(i, 4));
    }
  }
  return 0;
}

PublicationRecord record_from_article(const XmlNode& article_node) {
  const XmlNode* citation = article_node.child("MedlineCitation");
  if (citation == nullptr) {
    throw DataError(
        "efetch response missing PubmedArticle/MedlineCitation");
  }
  PublicationRecord record;
  const XmlNode* pmid = citation->child("PMID");
  if (pmid == nullptr) {
    throw DataError("efetch response missing MedlineCitation/PMID");
  }
  record.pmid = trim(pmid->text);

  const XmlNode* article = citation->child("Article");
  if (article == nullptr) {
    throw DataError("efetch record " + record.pmid +
                    " missing MedlineCitation/Article");
  }
  if (const XmlNode* title = article->child("ArticleTitle")) {
    record.title = trim(title->deep_text());
  }
  if (const XmlNode* abstr = article->child("Abstract")) {
    std::vector<std::string> segments;
    for (const XmlNode* seg : abstr->children_named("AbstractText")) {
      std::string text = trim(seg->deep_text());
      if (!text.empty()) segments.push_back(std::move(text));
    }
    record.abstract_text = join(segments, " ");
  }
  if (const XmlNode* authors = article->child("AuthorList")) {
    for (const XmlNode* author : authors->children_named("Author")) {
      Author a;
      if (const XmlNode* last = author->child("LastName")) {
        a.last_name = trim(last->text);
      } else if (const XmlNode* collective = author->child("CollectiveName")) {
        a.last_name = trim(collective->text);
      } else {
        continue;
      }
      if (const XmlNode* fore = author->child("ForeName")) {
        a.fore_name = trim(fore->text);
      }
      record.authors.push_back(std::move(a));
    }
  }
  if (const XmlNode* mesh_list = citation->child("MeshHeadingList")) {
    std::set<std::string> seen;
    for (const XmlNode* heading : mesh_list->children_named("MeshHeading")) {
      if (const XmlNode* descriptor = heading->child("DescriptorName")) {
        std::string term = trim(descriptor->text);
        if (!term.empty() && seen.insert(lower(term)).second) {
          record.mesh_terms.push_back(std::move(term));
        }
      }
    }
  }
  if (const XmlNode* pub_date =
          article->find_path("Journal/JournalIssue/PubDate")) {
    record.year = year_from_pubdate(*pub_date);
  }
  return record;
}

}  // namespace

std::vector<PublicationRecord> parse_efetch_response(std::string_view xml) {
  auto root = parse_xml(xml);
  if (root->name != "PubmedArticleSet") {
    throw DataError("unexpected efetch root element <" + root->name + ">");
  }
  std::vector<PublicationRecord> records;
  for (const XmlNode* article : root->children_named("PubmedArticle")) {
    records.push_back(record_from_article(*article));
  }
  return records;
}

std::vector<PublicationRecord> EutilsClient::fetch_records(
    const std::vector<std::string>& pmids) {
  for (const std::string& pmid : pmids) {
    if (!digits_only(pmid)) {
      throw DataError("pmid not numeric: \"" + pmid + "\"");
    }
  }
  missing_pmids_.clear();
  std::vector<PublicationRecord> records;
  for (std::size_t start = 0; start < pmids.size();
       start += static_cast<std::size_t>(policy_.batch_size)) {
    std::size_t end = std::min(
        pmids.size(), start + static_cast<std::size_t>(policy_.batch_size));
    std::vector<std::string> batch(pmids.begin() + static_cast<std::ptrdiff_t>(start),
                                   pmids.begin() + static_cast<std::ptrdiff_t>(end));
    std::string body = get_with_retry(efetch_url(batch));
    std::vector<PublicationRecord> parsed = parse_efetch_response(body);
    std::unordered_set<std::string> returned;
    for (PublicationRecord& r : parsed) {
      returned.insert(r.pmid);
      records.push_back(std::move(r));
    }
    for (const std::string& pmid : batch) {
      if (!returned.contains(pmid)) missing_pmids_.push_back(pmid);
    }
  }
  return records;
}

AuthorshipRule parse_authorship_rule(std::string_view name) {
  if (name == "first3-or-last3") return AuthorshipRule::FirstThreeOrLastThree;
  if (name == "first3-or-senior") return AuthorshipRule::FirstThreeOrSenior;
  throw ConfigError("unknown authorship rule \"" + std::string(name) +
                    "\" (expected first3-or-last3 or first3-or-senior)");
}

namespace {

// "Last, Fore" or "Fore [Middle] Last".
std::pair<std::string, std::string> split_researcher_name(
    const std::string& name) {
  std::string fore;
  std::string last;
  std::size_t comma = name.find(',');
  if (comma != std::string::npos) {
    last = trim(name.substr(0, comma));
    fore = trim(name.substr(comma + 1));
  } else {
    std::vector<std::string> parts;
    for (const std::string& p : split(name, ' ')) {
      std::string t = trim(p);
      if (!t.empty()) parts.push_back(t);
    }
    if (!parts.empty()) {
      last = parts.back();
      if (parts.size() > 1) fore = parts.front();
    }
  }
  return {lower(fore), lower(last)};
}

}  // namespace

std::optional<std::size_t> match_author_index(const PublicationRecord& record,
                                              const std::string& researcher_name,
                                              bool strict_fore_name) {
  auto [fore, last] = split_researcher_name(researcher_name);
  if (last.empty()) return std::nullopt;
  for (std::size_t i = 0; i < record.authors.size(); ++i) {
    const Author& a = record.authors[i];
    if (lower(a.last_name) != last) continue;
    std::string author_fore = lower(a.fore_name);
    if (strict_fore_name) {
      if (author_fore == fore) return i;
      continue;
    }
    // Initial match; an empty fore name on either side is not evidence
    // against the last-name match.
    if (fore.empty() || author_fore.empty() || fore[0] == author_fore[0]) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<PublicationRecord> filter_by_authorship(
    const std::vector<PublicationRecord>& records, const Researcher& researcher,
    AuthorshipRule rule, bool strict_fore_name) {
  std::vector<PublicationRecord> kept;
  for (const PublicationRecord& r : records) {
    auto index = match_author_index(r, researcher.name, strict_fore_name);
    if (!index) continue;
    std::size_t i = *index;
    std::size_t n = r.authors.size();
    bool keep = false;
    switch (rule) {
      case AuthorshipRule::FirstThreeOrLastThree:
        keep = i < 3 || i + 3 >= n;
        break;
      case AuthorshipRule::FirstThreeOrSenior:
        keep = i < 3 || i + 1 == n;
        break;
    }
    if (keep) kept.push_back(r);
  }
  return kept;
}

std::vector<PublicationRecord> filter_by_recency(
    const std::vector<PublicationRecord>& records, int window_years,
    int reference_year, int* dropped_no_year) {
  if (window_years < 1) throw ConfigError("recency window must be >= 1 year");
  if (dropped_no_year != nullptr) *dropped_no_year = 0;
  std::vector<PublicationRecord> kept;
  for (const PublicationRecord& r : records) {
    if (r.year == 0) {
      if (dropped_no_year != nullptr) ++*dropped_no_year;
      continue;
    }
    if (reference_year - r.year < window_years) kept.push_back(r);
  }
  return kept;
}

}  // namespace profkit
