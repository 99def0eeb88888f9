/*
 * Copyright 2026 The Jingo Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace jingo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// -- corpus ----------------------------------------------------------------

/// A diff header was recognized but its hunk body could not be parsed.
class MalformedDiff : public Error {
 public:
  using Error::Error;
};

/// No token survived preprocessing; callers skip the model update.
class EmptyDocument : public Error {
 public:
  using Error::Error;
};

// -- topic model -----------------------------------------------------------

class EmptyBatch : public Error {
 public:
  using Error::Error;
};

/// Held-out set contains no in-vocabulary token.
class NoTokens : public Error {
 public:
  using Error::Error;
};

// -- translation -----------------------------------------------------------

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Normal equations are rank deficient and no ridge was requested.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

class NotReady : public Error {
 public:
  using Error::Error;
};

// -- locator ---------------------------------------------------------------

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class EmptyIndex : public Error {
 public:
  using Error::Error;
};

// -- evaluation ------------------------------------------------------------

/// Event stream went backwards in time; the export is corrupt.
class CausalityViolation : public Error {
 public:
  using Error::Error;
};

class TooFewClasses : public Error {
 public:
  using Error::Error;
};

// -- persistence / ingestion -----------------------------------------------

class VersionMismatch : public Error {
 public:
  using Error::Error;
};

class CorruptSnapshot : public Error {
 public:
  using Error::Error;
};

class NotARepository : public Error {
 public:
  using Error::Error;
};

class ToolUnavailable : public Error {
 public:
  using Error::Error;
};

class UnknownCommit : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace jingo
