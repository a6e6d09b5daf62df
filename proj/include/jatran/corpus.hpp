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
// Ingestion of parallel section-per-line files (Judeo-Arabic source, Arabic
// reference) into tokenized, labeled documents.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace jatran::corpus {

enum class TokenLabel { ja, hebrew, punctuation };

std::string_view label_name(TokenLabel label);  // "JA", "Heb", "Punc"
std::optional<TokenLabel> label_from_name(std::string_view name);

struct Token {
  std::string surface;
  TokenLabel label = TokenLabel::ja;
  int section = 0;  // 1-based input line number
  int index = 0;    // 0-based position within the section
};

struct Section {
  int line = 0;  // 1-based line number in the input files
  std::vector<Token> source;
  std::vector<Token> reference;
};

struct ParallelCorpus {
  std::vector<Section> sections;
  std::set<int> dropped_lines;
  std::vector<std::string> warnings;
};

struct CorpusStats {
  std::size_t sections = 0;
  std::size_t words = 0;
  std::size_t ja = 0;
  std::size_t hebrew = 0;
  std::size_t punctuation = 0;
};

/// Splits a section line into tokens: whitespace first, then leading and
/// trailing punctuation runs peel off as standalone tokens. Word-internal
/// punctuation (abbreviation dots) stays attached. Stable: re-tokenizing the
/// joined output changes nothing.
std::vector<std::string> tokenize_section(std::string_view line);

/// Labels source-side tokens: Punctuation per is_punctuation_token, Hebrew
/// iff the token carries niqqud (or appears in the lexicon of known
/// Hebrew/abbreviation tokens), otherwise JA.
void label_source_tokens(std::vector<Token>& tokens,
                         const std::unordered_set<std::string>* hebrew_lexicon =
                             nullptr);

/// Reads the two parallel files (same line count), removes the listed
/// 1-based lines from both sides, strips Arabic diacritics from the
/// reference, separates punctuation on both sides, and labels the source.
/// Throws LineCountMismatch or InvalidEncoding.
ParallelCorpus ingest(const std::filesystem::path& source_path,
                      const std::filesystem::path& reference_path,
                      const std::set<int>& dropped_lines = {},
                      const std::unordered_set<std::string>* hebrew_lexicon =
                          nullptr);

CorpusStats stats(const ParallelCorpus& corpus);

/// Label-proportion statistics block, percentages to two decimals.
std::string format_stats(const CorpusStats& s);

/// Token table: tab-separated (section, index, surface, label), one source
/// token per line, no header.
void write_token_table(std::ostream& out, const ParallelCorpus& corpus);

/// Loads a one-token-per-line lexicon file; `#` comments allowed.
std::unordered_set<std::string> load_lexicon(const std::filesystem::path& path);

/// Parses a comma-separated list of 1-based line numbers (the --drop-lines
/// CLI argument).
std::set<int> parse_drop_lines(std::string_view arg);

}  // namespace jatran::corpus
