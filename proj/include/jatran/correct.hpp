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
//
// Pluggable post-correction stage: forwards transliterated Arabic to a
// grammatical-error-correction service (or a local identity/fixture backend)
// and returns corrected text.

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace jatran::correct {

enum class PromptTemplate { gec, transliteration, translation };

std::optional<PromptTemplate> template_from_name(std::string_view name);

struct CorrectionRequest {
  std::string text;  // one section of Arabic text; must be nonempty
  PromptTemplate prompt_template = PromptTemplate::gec;
  std::string model_id;
  int max_retries = 3;
  double timeout_seconds = 60.0;
  // Decoding options forwarded verbatim when set; the backends claim no
  // defaults of their own.
  std::optional<double> temperature;
  std::optional<double> top_p;
  std::optional<int> max_tokens;
};

struct CorrectionResponse {
  std::string corrected;
  std::string raw;
  bool extracted = false;  // true iff corrected came from the output tags
};

/// Fills the template's sentence slot with the request text. The correction
/// template brackets the input as `<input> ... </input>` and instructs the
/// model to bracket its answer as `<output> ... </output>`. Throws EmptyText
/// on empty input.
std::string build_prompt(const CorrectionRequest& request);

/// Content between the first `<output>` and the following `</output>`,
/// whitespace-trimmed; nullopt when the tags are absent.
std::optional<std::string> extract_tagged_output(std::string_view raw);

std::string wrap_tagged_output(std::string_view text);

/// 64-bit FNV-1a, lowercase hex. Fixture files may key on this instead of
/// raw text.
std::string fnv1a64_hex(std::string_view text);

class Backend {
 public:
  virtual ~Backend() = default;
  /// Exactly one response per request; retries happen inside.
  virtual CorrectionResponse correct(const CorrectionRequest& request) = 0;
};

/// Returns the input unchanged. Useful as the no-op baseline: composed with
/// the scorer it yields the empty-edit convention (precision 1, recall 0).
class IdentityBackend : public Backend {
 public:
  CorrectionResponse correct(const CorrectionRequest& request) override;
};

/// Replays scripted responses from a two-column TSV: the first column is
/// either the exact input text or its fnv1a64_hex, the second the output.
class FixtureBackend : public Backend {
 public:
  explicit FixtureBackend(const std::filesystem::path& tsv_path);
  CorrectionResponse correct(const CorrectionRequest& request) override;

 private:
  std::unordered_map<std::string, std::string> by_text_;
  std::unordered_map<std::string, std::string> by_hash_;
};

/// Chat-completion style HTTP JSON backend with bounded retries and
/// exponential backoff on transient failures.
class HttpBackend : public Backend {
 public:
  struct Config {
    std::string url;  // e.g. http://host:port/v1/chat/completions
    /// Environment variable holding the bearer credential. Empty disables
    /// auth (local servers); a set name whose variable is missing throws
    /// AuthMissing.
    std::string api_key_env = "JATRAN_API_KEY";
    int backoff_initial_ms = 500;
    int backoff_max_ms = 8000;
  };

  explicit HttpBackend(Config config);
  CorrectionResponse correct(const CorrectionRequest& request) override;

 private:
  Config config_;
};

/// Corrects sections concurrently (bounded by `concurrency`), reassembling
/// responses in section order. Empty sections pass through untouched without
/// reaching the backend.
std::vector<CorrectionResponse> correct_sections(
    Backend& backend, std::span<const std::string> sections,
    const CorrectionRequest& prototype, int concurrency = 1);

}  // namespace jatran::correct
