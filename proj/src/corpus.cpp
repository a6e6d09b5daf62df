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

#include "jatran/corpus.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "jatran/errors.hpp"
#include "jatran/script.hpp"
#include "jatran/unicode.hpp"

namespace jatran::corpus {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file: " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// A bracketed all-digit token is likely a footnote marker that survived
// upstream cleanup; flag it rather than guessing the edition's syntax.
bool looks_like_footnote_marker(const std::u32string& cps) {
  if (cps.size() < 3) return false;
  const char32_t open = cps.front();
  const char32_t close = cps.back();
  const bool bracketed = (open == U'[' && close == U']') ||
                         (open == U'(' && close == U')') ||
                         (open == U'{' && close == U'}');
  if (!bracketed) return false;
  for (std::size_t i = 1; i + 1 < cps.size(); ++i) {
    if (!script::is_digit(cps[i])) return false;
  }
  return true;
}

void split_whitespace(const std::u32string& cps,
                      std::vector<std::u32string>& out) {
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && script::is_space(cps[i])) ++i;
    std::size_t j = i;
    while (j < cps.size() && !script::is_space(cps[j])) ++j;
    if (j > i) out.push_back(cps.substr(i, j - i));
    i = j;
  }
}

}  // namespace

std::string_view label_name(TokenLabel label) {
  switch (label) {
    case TokenLabel::ja: return "JA";
    case TokenLabel::hebrew: return "Heb";
    case TokenLabel::punctuation: return "Punc";
  }
  return "JA";
}

std::optional<TokenLabel> label_from_name(std::string_view name) {
  if (name == "JA") return TokenLabel::ja;
  if (name == "Heb") return TokenLabel::hebrew;
  if (name == "Punc") return TokenLabel::punctuation;
  return std::nullopt;
}

std::vector<std::string> tokenize_section(std::string_view line) {
  std::vector<std::u32string> raw;
  split_whitespace(utf8::decode(line), raw);

  std::vector<std::string> tokens;
  for (const std::u32string& word : raw) {
    std::size_t begin = 0;
    std::size_t end = word.size();
    while (begin < end && script::is_punct_or_symbol(word[begin])) ++begin;
    if (begin == end) {
      tokens.push_back(utf8::encode(word));  // pure punctuation, keep the run
      continue;
    }
    while (end > begin && script::is_punct_or_symbol(word[end - 1])) --end;
    if (begin > 0) tokens.push_back(utf8::encode(word.substr(0, begin)));
    tokens.push_back(utf8::encode(word.substr(begin, end - begin)));
    if (end < word.size()) tokens.push_back(utf8::encode(word.substr(end)));
  }
  return tokens;
}

void label_source_tokens(std::vector<Token>& tokens,
                         const std::unordered_set<std::string>* hebrew_lexicon) {
  for (Token& t : tokens) {
    if (script::is_punctuation_token(t.surface)) {
      t.label = TokenLabel::punctuation;
    } else if ((hebrew_lexicon != nullptr &&
                hebrew_lexicon->contains(t.surface)) ||
               script::contains_niqqud(t.surface)) {
      t.label = TokenLabel::hebrew;
    } else {
      t.label = TokenLabel::ja;
    }
  }
}

ParallelCorpus ingest(const std::filesystem::path& source_path,
                      const std::filesystem::path& reference_path,
                      const std::set<int>& dropped_lines,
                      const std::unordered_set<std::string>* hebrew_lexicon) {
  const std::vector<std::string> source_lines = read_lines(source_path);
  const std::vector<std::string> reference_lines = read_lines(reference_path);
  if (source_lines.size() != reference_lines.size()) {
    throw LineCountMismatch(
        "line counts differ: " + source_path.string() + " has " +
        std::to_string(source_lines.size()) + ", " + reference_path.string() +
        " has " + std::to_string(reference_lines.size()));
  }
  for (int line : dropped_lines) {
    if (line < 1 || static_cast<std::size_t>(line) > source_lines.size()) {
      throw ConfigError("dropped line " + std::to_string(line) +
                        " is outside 1.." + std::to_string(source_lines.size()));
    }
  }

  const script::NormalizationPolicy reference_policy{
      .strip_arabic_diacritics = true};

  ParallelCorpus corpus;
  corpus.dropped_lines = dropped_lines;
  for (std::size_t idx = 0; idx < source_lines.size(); ++idx) {
    const int line_no = static_cast<int>(idx) + 1;
    if (dropped_lines.contains(line_no)) continue;

    Section section;
    section.line = line_no;

    const std::string source_line =
        script::canonicalize_upper_dots(source_lines[idx]);
    int i = 0;
    for (std::string& surface : tokenize_section(source_line)) {
      if (looks_like_footnote_marker(utf8::decode(surface))) {
        corpus.warnings.push_back("line " + std::to_string(line_no) +
                                  ": possible footnote marker `" + surface +
                                  "` in source");
      }
      section.source.push_back({std::move(surface), TokenLabel::ja, line_no, i++});
    }
    label_source_tokens(section.source, hebrew_lexicon);

    const std::string reference_line =
        script::normalize(reference_lines[idx], reference_policy);
    i = 0;
    for (std::string& surface : tokenize_section(reference_line)) {
      const TokenLabel label = script::is_punctuation_token(surface)
                                   ? TokenLabel::punctuation
                                   : TokenLabel::ja;
      section.reference.push_back({std::move(surface), label, line_no, i++});
    }

    corpus.sections.push_back(std::move(section));
  }
  return corpus;
}

CorpusStats stats(const ParallelCorpus& corpus) {
  CorpusStats s;
  s.sections = corpus.sections.size();
  for (const Section& section : corpus.sections) {
    for (const Token& t : section.source) {
      ++s.words;
      switch (t.label) {
        case TokenLabel::ja: ++s.ja; break;
        case TokenLabel::hebrew: ++s.hebrew; break;
        case TokenLabel::punctuation: ++s.punctuation; break;
      }
    }
  }
  return s;
}

std::string format_stats(const CorpusStats& s) {
  const auto pct = [&s](std::size_t n) {
    char buf[32];
    const double p = s.words == 0 ? 0.0 : 100.0 * static_cast<double>(n) /
                                              static_cast<double>(s.words);
    std::snprintf(buf, sizeof(buf), "%.2f%%", p);
    return std::string(buf);
  };
  std::ostringstream out;
  out << "sections: " << s.sections << '\n';
  out << "words: " << s.words << '\n';
  out << "  JA: " << s.ja << " (" << pct(s.ja) << ")\n";
  out << "  Hebrew: " << s.hebrew << " (" << pct(s.hebrew) << ")\n";
  out << "  punctuation: " << s.punctuation << " (" << pct(s.punctuation)
      << ")\n";
  return out.str();
}

void write_token_table(std::ostream& out, const ParallelCorpus& corpus) {
  for (const Section& section : corpus.sections) {
    for (const Token& t : section.source) {
      out << t.section << '\t' << t.index << '\t' << t.surface << '\t'
          << label_name(t.label) << '\n';
    }
  }
}

std::unordered_set<std::string> load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open lexicon file: " + path.string());
  std::unordered_set<std::string> lexicon;
  std::string line;
  while (std::getline(in, line)) {
    if (std::size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    // Canonicalize like ingested source text so surface lookups match.
    for (const std::string& t : tokenize_section(line)) {
      lexicon.insert(script::canonicalize_upper_dots(t));
    }
  }
  return lexicon;
}

std::set<int> parse_drop_lines(std::string_view arg) {
  std::set<int> lines;
  std::string item;
  std::istringstream in{std::string(arg)};
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ConfigError("bad --drop-lines entry: `" + item + "`");
    }
    if (pos != item.size() || value < 1) {
      throw ConfigError("bad --drop-lines entry: `" + item + "`");
    }
    lines.insert(value);
  }
  return lines;
}

}  // namespace jatran::corpus
