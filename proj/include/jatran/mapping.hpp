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
// Deterministic rule-based transliteration of Hebrew-script Judeo-Arabic
// tokens into Arabic script, with dotted and dotless modes.

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace jatran::mapping {

enum class TranslitMode { dotted, dotless };

std::string_view mode_name(TranslitMode mode);
std::optional<TranslitMode> mode_from_name(std::string_view name);

/// The Hebrew→Arabic character correspondence. base_map is total over the
/// 22 Hebrew letters; dotted_map covers exactly the seven letters whose
/// upper-dot variants denote different Arabic consonants. Immutable after
/// construction; safe to share across threads.
class MappingTable {
 public:
  /// The built-in correspondence. Conventions vary between manuscripts, so
  /// per-text overrides can be layered on top with load().
  static MappingTable defaults();

  /// defaults() plus overrides from a config file: UTF-8 lines of the form
  /// `<hebrew-letter>[+dot] <TAB> <arabic-letter>`, `#` comments, later
  /// lines override earlier ones.
  static MappingTable load(const std::filesystem::path& path);

  /// Applies override lines from a stream (same format as load()).
  void apply_overrides(std::istream& in, const std::string& origin = "<stream>");

  std::optional<char32_t> base(char32_t hebrew_letter) const;
  std::optional<char32_t> dotted(char32_t hebrew_letter) const;
  bool is_passthrough(char32_t cp) const;

  /// Enforces the table invariants: base totality, the seven-key dotted set,
  /// single Arabic-letter values, dotted value distinct from the base value.
  /// Throws ConfigError on violation.
  void validate() const;

  /// Writes the table back in the config-file format.
  std::string serialize() const;

 private:
  std::unordered_map<char32_t, char32_t> base_map_;
  std::unordered_map<char32_t, char32_t> dotted_map_;
};

struct TokenWarning {
  std::size_t offset = 0;  // code-point offset within the token
  std::string message;
};

/// Maps one token to Arabic script. Letters map one-to-one (a letter whose
/// mark run contains the upper dot maps through dotted_map in dotted mode);
/// niqqud is dropped; punctuation and digits pass through. Throws
/// UnmappableCharacter for anything else, including a dangling upper dot.
/// An upper dot on a letter outside the seven-key set is stripped with a
/// warning: such dots mark abbreviations or numerals, not consonants.
std::string transliterate_token(std::string_view token,
                                const MappingTable& table, TranslitMode mode,
                                std::vector<TokenWarning>* warnings = nullptr);

struct TextWarning {
  std::size_t token_index = 0;
  std::string token;
  std::string message;
};

struct TextResult {
  std::string text;
  std::vector<TextWarning> warnings;
};

/// Lenient whole-text wrapper: whitespace is preserved verbatim, each token
/// goes through transliterate_token, and tokens that raise
/// UnmappableCharacter are copied unchanged and recorded as warnings.
TextResult transliterate_text(std::string_view text, const MappingTable& table,
                              TranslitMode mode);

}  // namespace jatran::mapping
