// Copyright 2026 The Jatran Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jatran {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scalar outside the Hebrew block that is neither shared punctuation nor a
/// combining mark usable in Hebrew context.
class NotHebrewScript : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a nonempty token got an empty one.
class EmptyToken : public Error {
 public:
  using Error::Error;
};

/// A correction request carried no text.
class EmptyText : public Error {
 public:
  using Error::Error;
};

/// Malformed UTF-8 input.
class InvalidEncoding : public Error {
 public:
  using Error::Error;
};

/// A character the transliteration table cannot handle. Signals corpus noise;
/// carries the code-point offset within the offending token.
class UnmappableCharacter : public Error {
 public:
  UnmappableCharacter(const std::string& message, std::size_t offset,
                      char32_t codepoint)
      : Error(message), offset_(offset), codepoint_(codepoint) {}

  std::size_t offset() const { return offset_; }
  char32_t codepoint() const { return codepoint_; }

 private:
  std::size_t offset_;
  char32_t codepoint_;
};

/// Parallel files disagree on line count.
class LineCountMismatch : public Error {
 public:
  using Error::Error;
};

/// Accuracy was requested over rows that are all excluded from evaluation.
class NoEvaluableRows : public Error {
 public:
  using Error::Error;
};

/// Two edits within a single edit list cover overlapping token spans.
class OverlappingEdits : public Error {
 public:
  using Error::Error;
};

/// Unrecognized prompt template name.
class UnknownTemplate : public Error {
 public:
  using Error::Error;
};

/// The remote correction backend could not be reached (after retries).
class TransportFailure : public Error {
 public:
  using Error::Error;
};

/// The HTTP backend needs a credential and the environment does not provide one.
class AuthMissing : public Error {
 public:
  using Error::Error;
};

/// Bad configuration input: mapping files, fixture files, CLI arguments.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace jatran
