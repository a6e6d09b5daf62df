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

#include "jatran/mapping.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "jatran/errors.hpp"
#include "jatran/script.hpp"
#include "jatran/unicode.hpp"

namespace jatran::mapping {

namespace {

struct Pair {
  char32_t hebrew;
  char32_t arabic;
};

constexpr std::array<Pair, 22> kDefaultBase = {{
    {U'\x05D0', U'\x0627'},  // א ا
    {U'\x05D1', U'\x0628'},  // ב ب
    {U'\x05D2', U'\x062C'},  // ג ج
    {U'\x05D3', U'\x062F'},  // ד د
    {U'\x05D4', U'\x0647'},  // ה ه
    {U'\x05D5', U'\x0648'},  // ו و
    {U'\x05D6', U'\x0632'},  // ז ز
    {U'\x05D7', U'\x062D'},  // ח ح
    {U'\x05D8', U'\x0637'},  // ט ط
    {U'\x05D9', U'\x064A'},  // י ي
    {U'\x05DB', U'\x0643'},  // כ ك
    {U'\x05DC', U'\x0644'},  // ל ل
    {U'\x05DE', U'\x0645'},  // מ م
    {U'\x05E0', U'\x0646'},  // נ ن
    {U'\x05E1', U'\x0633'},  // ס س
    {U'\x05E2', U'\x0639'},  // ע ع
    {U'\x05E4', U'\x0641'},  // פ ف
    {U'\x05E6', U'\x0635'},  // צ ص
    {U'\x05E7', U'\x0642'},  // ק ق
    {U'\x05E8', U'\x0631'},  // ר ر
    {U'\x05E9', U'\x0634'},  // ש ش
    {U'\x05EA', U'\x062A'},  // ת ت
}};

// The seven letters whose upper-dot variants denote Arabic consonants with
// no plain Hebrew counterpart.
constexpr std::array<Pair, 7> kDefaultDotted = {{
    {U'\x05D2', U'\x063A'},  // גׄ غ
    {U'\x05D3', U'\x0630'},  // דׄ ذ
    {U'\x05D4', U'\x0629'},  // הׄ ة
    {U'\x05D8', U'\x0638'},  // טׄ ظ
    {U'\x05DB', U'\x062E'},  // כׄ خ
    {U'\x05E6', U'\x0636'},  // צׄ ض
    {U'\x05EA', U'\x062B'},  // תׄ ث
}};

bool is_dotted_key(char32_t hebrew_letter) {
  return std::any_of(kDefaultDotted.begin(), kDefaultDotted.end(),
                     [hebrew_letter](Pair p) { return p.hebrew == hebrew_letter; });
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string_view mode_name(TranslitMode mode) {
  return mode == TranslitMode::dotted ? "dotted" : "dotless";
}

std::optional<TranslitMode> mode_from_name(std::string_view name) {
  if (name == "dotted") return TranslitMode::dotted;
  if (name == "dotless") return TranslitMode::dotless;
  return std::nullopt;
}

MappingTable MappingTable::defaults() {
  MappingTable t;
  for (Pair p : kDefaultBase) t.base_map_[p.hebrew] = p.arabic;
  for (Pair p : kDefaultDotted) t.dotted_map_[p.hebrew] = p.arabic;
  return t;
}

MappingTable MappingTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open mapping file: " + path.string());
  MappingTable t = defaults();
  t.apply_overrides(in, path.string());
  return t;
}

void MappingTable::apply_overrides(std::istream& in, const std::string& origin) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (trim(line).empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": expected `<hebrew-letter>[+dot] <TAB> <arabic-letter>`");
    }
    const std::string key_field = trim(line.substr(0, tab));
    const std::string value_field = trim(line.substr(tab + 1));
    const std::u32string value = utf8::decode(value_field);
    if (value.size() != 1 || !script::is_arabic_letter(value[0])) {
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": value must be a single Arabic letter");
    }

    std::u32string key = utf8::decode(key_field);
    bool dotted = false;
    if (key.size() >= 5 &&
        utf8::encode(key.substr(key.size() - 4)) == "+dot") {
      dotted = true;
      key.erase(key.size() - 4);
    } else if (key.size() == 2 && key[1] == script::kUpperDot) {
      dotted = true;
      key.pop_back();
    }
    if (key.size() != 1 || !script::is_hebrew_letter(key[0])) {
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": key must be a single Hebrew letter, optionally `+dot`");
    }
    const char32_t letter = script::final_to_base(key[0]);
    if (dotted) {
      if (!is_dotted_key(letter)) {
        throw ConfigError(origin + ":" + std::to_string(line_no) +
                          ": letter has no upper-dot variant");
      }
      dotted_map_[letter] = value[0];
    } else {
      base_map_[letter] = value[0];
    }
  }
  validate();
}

std::optional<char32_t> MappingTable::base(char32_t hebrew_letter) const {
  auto it = base_map_.find(script::final_to_base(hebrew_letter));
  if (it == base_map_.end()) return std::nullopt;
  return it->second;
}

std::optional<char32_t> MappingTable::dotted(char32_t hebrew_letter) const {
  auto it = dotted_map_.find(script::final_to_base(hebrew_letter));
  if (it == dotted_map_.end()) return std::nullopt;
  return it->second;
}

bool MappingTable::is_passthrough(char32_t cp) const {
  return script::is_punct_or_symbol(cp) || script::is_digit(cp);
}

void MappingTable::validate() const {
  for (Pair p : kDefaultBase) {
    if (!base_map_.contains(p.hebrew)) {
      throw ConfigError("base map is missing a Hebrew letter: " +
                        utf8::u_plus(p.hebrew));
    }
  }
  if (dotted_map_.size() != kDefaultDotted.size()) {
    throw ConfigError("dotted map must cover exactly the seven dotted letters");
  }
  for (const auto& [letter, arabic] : dotted_map_) {
    if (!is_dotted_key(letter)) {
      throw ConfigError("unexpected dotted-map key: " + utf8::u_plus(letter));
    }
    if (arabic == base_map_.at(letter)) {
      throw ConfigError("dotted value must differ from the base value for " +
                        utf8::u_plus(letter));
    }
  }
}

std::string MappingTable::serialize() const {
  std::vector<std::pair<char32_t, char32_t>> base(base_map_.begin(),
                                                  base_map_.end());
  std::vector<std::pair<char32_t, char32_t>> dotted(dotted_map_.begin(),
                                                    dotted_map_.end());
  std::sort(base.begin(), base.end());
  std::sort(dotted.begin(), dotted.end());
  std::string out;
  for (auto [h, a] : base) {
    utf8::append(out, h);
    out += '\t';
    utf8::append(out, a);
    out += '\n';
  }
  for (auto [h, a] : dotted) {
    utf8::append(out, h);
    out += "+dot\t";
    utf8::append(out, a);
    out += '\n';
  }
  return out;
}

std::string transliterate_token(std::string_view token,
                                const MappingTable& table, TranslitMode mode,
                                std::vector<TokenWarning>* warnings) {
  std::u32string cps = utf8::decode(script::canonicalize_upper_dots(token));
  if (mode == TranslitMode::dotless) {
    std::erase(cps, script::kUpperDot);
  }

  std::string out;
  const std::size_t n = cps.size();
  std::size_t i = 0;
  while (i < n) {
    const char32_t cp = cps[i];
    if (script::is_hebrew_letter(cp)) {
      const char32_t letter = script::final_to_base(cp);
      // Consume the combining-mark run and look for an upper dot in it.
      std::size_t j = i + 1;
      bool has_dot = false;
      while (j < n && script::is_hebrew_mark(cps[j])) {
        if (cps[j] == script::kUpperDot) has_dot = true;
        ++j;
      }
      if (has_dot) {
        if (std::optional<char32_t> arabic = table.dotted(letter)) {
          utf8::append(out, *arabic);
        } else {
          // Abbreviation or numeral dot; keep the plain consonant.
          if (warnings != nullptr) {
            warnings->push_back(
                {i, "upper dot on " + utf8::u_plus(letter) +
                        " has no dotted mapping; dot dropped"});
          }
          utf8::append(out, *table.base(letter));
        }
      } else {
        utf8::append(out, *table.base(letter));
      }
      i = j;
      continue;
    }
    if (cp == script::kUpperDot) {
      throw UnmappableCharacter("dangling upper dot at offset " +
                                    std::to_string(i),
                                i, cp);
    }
    if (script::is_hebrew_mark(cp)) {
      ++i;  // stray niqqud; dropped like attached niqqud
      continue;
    }
    if (table.is_passthrough(cp)) {
      utf8::append(out, cp);
      ++i;
      continue;
    }
    throw UnmappableCharacter(
        "unmappable character " + utf8::u_plus(cp) + " at offset " +
            std::to_string(i),
        i, cp);
  }
  return out;
}

TextResult transliterate_text(std::string_view text, const MappingTable& table,
                              TranslitMode mode) {
  std::u32string cps = utf8::decode(text);
  TextResult result;
  std::size_t token_index = 0;
  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    if (script::is_space(cps[i])) {
      utf8::append(result.text, cps[i]);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !script::is_space(cps[j])) ++j;
    const std::string token = utf8::encode(cps.substr(i, j - i));
    std::vector<TokenWarning> token_warnings;
    try {
      result.text += transliterate_token(token, table, mode, &token_warnings);
      for (const TokenWarning& w : token_warnings) {
        result.warnings.push_back({token_index, token, w.message});
      }
    } catch (const UnmappableCharacter& e) {
      result.text += token;  // copied verbatim; surfaced as a warning
      result.warnings.push_back({token_index, token, e.what()});
    }
    ++token_index;
    i = j;
  }
  return result;
}

}  // namespace jatran::mapping
