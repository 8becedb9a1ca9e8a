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

#ifndef PROFKIT_ERRORS_HPP
#define PROFKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace profkit {

/// Base class for all profkit errors. The CLI maps the subclasses onto
/// distinct process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or arguments (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input data: parse failures, schema violations,
/// violated preconditions (exit code 3).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Network or remote-service failure (exit code 4).
class TransportError : public Error {
 public:
  using Error::Error;
};

}  // namespace profkit

#endif  // PROFKIT_ERRORS_HPP
