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

#include "jatran/evaluate.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "jatran/errors.hpp"
#include "jatran/script.hpp"
#include "jatran/unicode.hpp"

namespace jatran::eval {

namespace {

double safe_div(long num, long den, double when_empty) {
  if (den == 0) return when_empty;
  return static_cast<double>(num) / static_cast<double>(den);
}

double f_measure(double p, double r, double beta_squared) {
  const double den = beta_squared * p + r;
  if (den <= 0.0) return 0.0;
  return (1.0 + beta_squared) * p * r / den;
}

ScoreReport report_from_counts(const ScoreCounts& c) {
  ScoreReport rep;
  rep.counts = c;
  rep.precision = safe_div(c.matched_edits, c.system_edits, 1.0);
  rep.recall = safe_div(c.matched_edits, c.gold_edits, 1.0);
  rep.f1 = f_measure(rep.precision, rep.recall, 1.0);
  rep.f_half = f_measure(rep.precision, rep.recall, 0.25);
  rep.accuracy = safe_div(c.matched_words, c.eval_words, 0.0);
  return rep;
}

void check_no_overlap(std::span<const EditSpan> edits, const char* which) {
  std::vector<std::pair<int, int>> spans;
  spans.reserve(edits.size());
  for (const EditSpan& e : edits) {
    if (e.start > e.end) {
      throw OverlappingEdits(std::string(which) + " edit has start > end");
    }
    spans.emplace_back(e.start, e.end);
  }
  std::sort(spans.begin(), spans.end());
  for (std::size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].first < spans[i - 1].second) {
      throw OverlappingEdits(std::string(which) + " edits overlap at token " +
                             std::to_string(spans[i].first));
    }
  }
}

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::string percent1(double ratio) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", 100.0 * ratio);
  return buf;
}

}  // namespace

std::vector<EvalRow> make_eval_rows(std::span<const align::ThreeWayRow> rows,
                                    HypColumn column) {
  std::vector<EvalRow> out;
  out.reserve(rows.size());
  for (const align::ThreeWayRow& row : rows) {
    out.push_back({column == HypColumn::dotted ? row.hyp_dotted : row.hyp_dotless,
                   row.reference, row.label});
  }
  return out;
}

ScoreReport exact_match_accuracy(std::span<const EvalRow> rows,
                                 AccuracyRule rule) {
  const script::NormalizationPolicy strip{.strip_arabic_diacritics = true};
  ScoreCounts counts;
  for (const EvalRow& row : rows) {
    if (!row.reference.has_value()) continue;
    if (rule == AccuracyRule::translit &&
        row.label != corpus::TokenLabel::ja) {
      continue;
    }
    ++counts.eval_words;
    if (row.hypothesis == script::normalize(*row.reference, strip)) {
      ++counts.matched_words;
    }
  }
  if (counts.eval_words == 0) {
    throw NoEvaluableRows("no rows qualify for accuracy evaluation");
  }
  ScoreReport rep;  // word accuracy only; edit fields stay zero
  rep.counts = counts;
  rep.accuracy = safe_div(counts.matched_words, counts.eval_words, 0.0);
  return rep;
}

std::vector<EditSpan> extract_edits(std::span<const std::string> source,
                                    std::span<const std::string> target,
                                    const align::AlignmentCost& cost) {
  const align::AlignmentPath path = align::align_path(source, target, cost);
  std::vector<EditSpan> edits;
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<EditSpan> open;
  const auto flush = [&edits, &open]() {
    if (open) {
      edits.push_back(std::move(*open));
      open.reset();
    }
  };
  for (align::StepKind step : path.steps) {
    const bool identical =
        step == align::StepKind::pair && source[i] == target[j];
    if (identical) {
      flush();
      ++i;
      ++j;
      continue;
    }
    if (!open) open = EditSpan{static_cast<int>(i), static_cast<int>(i), {}};
    switch (step) {
      case align::StepKind::pair:
        open->replacement.push_back(target[j]);
        ++i;
        ++j;
        break;
      case align::StepKind::hyp_only:  // source token deleted
        ++i;
        break;
      case align::StepKind::ref_only:  // target token inserted
        open->replacement.push_back(target[j]);
        ++j;
        break;
    }
    open->end = static_cast<int>(i);
  }
  flush();
  return edits;
}

std::vector<std::string> apply_edits(std::span<const std::string> source,
                                     std::span<const EditSpan> edits) {
  std::vector<EditSpan> sorted(edits.begin(), edits.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const EditSpan& a, const EditSpan& b) {
              return std::pair(a.start, a.end) < std::pair(b.start, b.end);
            });
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (const EditSpan& e : sorted) {
    for (; pos < static_cast<std::size_t>(e.start) && pos < source.size(); ++pos) {
      out.push_back(source[pos]);
    }
    out.insert(out.end(), e.replacement.begin(), e.replacement.end());
    pos = static_cast<std::size_t>(e.end);
  }
  for (; pos < source.size(); ++pos) out.push_back(source[pos]);
  return out;
}

void M2Accumulator::add(std::span<const EditSpan> system_edits,
                        std::span<const EditSpan> gold_edits) {
  check_no_overlap(system_edits, "system");
  check_no_overlap(gold_edits, "gold");
  // Multiset intersection on (start, end, replacement).
  std::map<std::tuple<int, int, std::vector<std::string>>, long> gold_multiset;
  for (const EditSpan& e : gold_edits) {
    ++gold_multiset[{e.start, e.end, e.replacement}];
  }
  for (const EditSpan& e : system_edits) {
    auto it = gold_multiset.find({e.start, e.end, e.replacement});
    if (it != gold_multiset.end() && it->second > 0) {
      --it->second;
      ++counts_.matched_edits;
    }
  }
  counts_.system_edits += static_cast<long>(system_edits.size());
  counts_.gold_edits += static_cast<long>(gold_edits.size());
}

ScoreReport M2Accumulator::report() const { return report_from_counts(counts_); }

ScoreReport m2_score(std::span<const EditSpan> system_edits,
                     std::span<const EditSpan> gold_edits) {
  M2Accumulator acc;
  acc.add(system_edits, gold_edits);
  return acc.report();
}

std::string_view category_name(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::valid_paraphrase: return "valid_paraphrase";
    case ErrorCategory::unnecessary_change: return "unnecessary_change";
    case ErrorCategory::alif_hamza: return "alif_hamza";
    case ErrorCategory::wrong_word: return "wrong_word";
    case ErrorCategory::source_error: return "source_error";
    case ErrorCategory::heb_translation: return "heb_translation";
    case ErrorCategory::unk_output: return "unk_output";
    case ErrorCategory::unclassified: return "unclassified";
  }
  return "unclassified";
}

std::string collapse_alif_hamza(std::string_view text) {
  std::u32string out;
  for (char32_t cp : utf8::decode(text)) {
    switch (cp) {
      case U'\x0622':  // آ
      case U'\x0623':  // أ
      case U'\x0625':  // إ
        out.push_back(U'\x0627');
        break;
      case U'\x0621':  // ء
      case U'\x0624':  // ؤ
      case U'\x0626':  // ئ
        break;
      case U'\x0629':  // ة -> ه
        out.push_back(U'\x0647');
        break;
      case U'\x0649':  // ى -> ي
        out.push_back(U'\x064A');
        break;
      default:
        out.push_back(cp);
    }
  }
  return utf8::encode(out);
}

ErrorCategory classify_error(const ErrorRow& row) {
  if (row.corrected == align::kUnk) return ErrorCategory::unk_output;
  if (row.label == corpus::TokenLabel::hebrew) {
    return ErrorCategory::heb_translation;
  }
  if (row.translit == row.reference && row.corrected != row.reference) {
    return ErrorCategory::unnecessary_change;
  }
  if (collapse_alif_hamza(row.corrected) == collapse_alif_hamza(row.reference)) {
    return ErrorCategory::alif_hamza;
  }
  // valid_paraphrase, source_error, and wrong_word need human judgment.
  return ErrorCategory::unclassified;
}

std::vector<ErrorCategory> classify_errors(std::span<const ErrorRow> rows) {
  std::vector<ErrorCategory> out;
  out.reserve(rows.size());
  for (const ErrorRow& row : rows) out.push_back(classify_error(row));
  return out;
}

void write_m2(std::ostream& out, std::span<const std::string> source_tokens,
              std::span<const EditSpan> edits) {
  out << "S";
  for (const std::string& t : source_tokens) out << ' ' << t;
  out << '\n';
  for (const EditSpan& e : edits) {
    out << "A " << e.start << ' ' << e.end << "|||NA|||";
    for (std::size_t k = 0; k < e.replacement.size(); ++k) {
      if (k > 0) out << ' ';
      out << e.replacement[k];
    }
    out << "|||REQUIRED|||-NONE-|||0\n";
  }
  out << '\n';
}

std::vector<M2Entry> read_m2(std::istream& in) {
  std::vector<M2Entry> entries;
  std::optional<M2Entry> current;
  std::string line;
  int line_no = 0;
  const auto flush = [&entries, &current]() {
    if (current) {
      entries.push_back(std::move(*current));
      current.reset();
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.rfind("S ", 0) == 0 || line == "S") {
      flush();
      current = M2Entry{};
      current->source_tokens = split_tokens(line.substr(1));
      continue;
    }
    if (line.rfind("A ", 0) == 0) {
      if (!current) {
        throw ConfigError("m2 line " + std::to_string(line_no) +
                          ": annotation before any S line");
      }
      std::vector<std::string> fields;
      std::size_t start = 2;
      while (true) {
        const std::size_t sep = line.find("|||", start);
        fields.push_back(line.substr(start, sep - start));
        if (sep == std::string::npos) break;
        start = sep + 3;
      }
      if (fields.size() != 6) {
        throw ConfigError("m2 line " + std::to_string(line_no) +
                          ": expected 6 ||| fields");
      }
      EditSpan edit;
      try {
        std::istringstream span(fields[0]);
        if (!(span >> edit.start >> edit.end)) {
          throw std::invalid_argument("span");
        }
      } catch (const std::exception&) {
        throw ConfigError("m2 line " + std::to_string(line_no) +
                          ": bad span `" + fields[0] + "`");
      }
      edit.replacement = split_tokens(fields[2]);
      current->edits.push_back(std::move(edit));
      continue;
    }
    throw ConfigError("m2 line " + std::to_string(line_no) +
                      ": expected S, A, or blank");
  }
  flush();
  return entries;
}

std::string format_m2_line(const ScoreReport& report) {
  return "P=" + percent1(report.precision) + " R=" + percent1(report.recall) +
         " F1=" + percent1(report.f1) + " F0.5=" + percent1(report.f_half);
}

std::string format_accuracy_line(const ScoreReport& report) {
  return "accuracy=" + percent1(report.accuracy) + " (" +
         std::to_string(report.counts.matched_words) + "/" +
         std::to_string(report.counts.eval_words) + ")";
}

}  // namespace jatran::eval
