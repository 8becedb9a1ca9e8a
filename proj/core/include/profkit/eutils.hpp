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

#ifndef PROFKIT_EUTILS_HPP
#define PROFKIT_EUTILS_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "profkit/corpus.hpp"
#include "profkit/ratelimit.hpp"

namespace profkit {

struct SearchQuery {
  std::string author_name;
  std::string affiliation;  // optional, for name disambiguation
  int date_from = 0;
  int date_to = 0;
};

struct FetchPolicy {
  // NCBI allows 3 req/s anonymous, 10 req/s with an API key.
  double max_requests_per_second = 3.0;
  int batch_size = 200;
  int retries = 2;
};

// GET abstraction so the client runs against live HTTP or recorded fixtures.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  // Full URL in, body out. Throws TransportError on failure.
  virtual std::string get(const std::string& url) = 0;
};

// Serves fixtures/eutils/<sha256-of-url>.xml. Missing fixture is a
// TransportError naming both the URL and the digest so recordings are easy
// to add.
class FixtureTransport : public HttpTransport {
 public:
  explicit FixtureTransport(std::filesystem::path dir);
  std::string get(const std::string& url) override;

 private:
  std::filesystem::path dir_;
};

class LiveTransport : public HttpTransport {
 public:
  std::string get(const std::string& url) override;
};

class EutilsClient {
 public:
  // api_key, when set, is appended to every request and lifts the rate cap.
  EutilsClient(std::shared_ptr<HttpTransport> transport, FetchPolicy policy,
               std::shared_ptr<Clock> clock = nullptr,
               std::optional<std::string> api_key = std::nullopt);

  // Follows retstart pagination until all result ids are collected.
  std::vector<std::string> search_pmids(const SearchQuery& query);

  // Fetches in batches of policy.batch_size. PMIDs absent from the response
  // are recorded in missing_pmids(), not raised.
  std::vector<PublicationRecord> fetch_records(
      const std::vector<std::string>& pmids);

  const std::vector<std::string>& missing_pmids() const {
    return missing_pmids_;
  }

  std::string esearch_url(const SearchQuery& query, int retstart,
                          int retmax) const;
  std::string efetch_url(const std::vector<std::string>& batch) const;

 private:
  std::string get_with_retry(const std::string& url);

  std::shared_ptr<HttpTransport> transport_;
  FetchPolicy policy_;
  std::shared_ptr<Clock> clock_;
  std::optional<std::string> api_key_;
  std::unique_ptr<RateLimiter> limiter_;
  std::vector<std::string> missing_pmids_;
};

// Parsing helpers, exposed for fixture-level tests.
struct EsearchPage {
  int count = 0;
  std::vector<std::string> ids;
};
EsearchPage parse_esearch_response(std::string_view xml);
std::vector<PublicationRecord> parse_efetch_response(std::string_view xml);

enum class AuthorshipRule { FirstThreeOrLastThree, FirstThreeOrSenior };

AuthorshipRule parse_authorship_rule(std::string_view name);

// Case-insensitive last name + fore-name initial match; strict mode requires
// the full fore name. Returns the first matching author index or nullopt.
std::optional<std::size_t> match_author_index(const PublicationRecord& record,
                                              const std::string& researcher_name,
                                              bool strict_fore_name = false);

std::vector<PublicationRecord> filter_by_authorship(
    const std::vector<PublicationRecord>& records, const Researcher& researcher,
    AuthorshipRule rule, bool strict_fore_name = false);

// Keeps records with reference_year - year < window_years. Records whose year
// could not be parsed (year == 0) are dropped; *dropped_no_year counts them.
std::vector<PublicationRecord> filter_by_recency(
    const std::vector<PublicationRecord>& records, int window_years,
    int reference_year, int* dropped_no_year = nullptr);

}  // namespace profkit

#endif  // PROFKIT_EUTILS_HPP
