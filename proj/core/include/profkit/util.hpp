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

#ifndef PROFKIT_UTIL_HPP
#define PROFKIT_UTIL_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace profkit {

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

/// Reads a whole file; throws DataError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Writes `content` to `path`, creating parent directories as needed.
void write_file(const std::filesystem::path& path, std::string_view content);

/// Splits on a single character, keeping empty fields.
std::vector<std::string> split(std::string_view text, char sep);

/// Strips leading/trailing ASCII whitespace.
std::string trim(std::string_view text);

/// Joins strings with a separator.
std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// True if `text` is non-empty and all characters are ASCII digits.
bool digits_only(std::string_view text);

/// Percent-encodes a URL query value (RFC 3986 unreserved set kept).
std::string url_encode(std::string_view value);

}  // namespace profkit

#endif  // PROFKIT_UTIL_HPP
