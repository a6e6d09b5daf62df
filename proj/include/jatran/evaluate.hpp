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
// Exact-match transliteration accuracy, MaxMatch edit-overlap scoring for
// post-correction, and the error-category report.

#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jatran/align.hpp"
#include "jatran/corpus.hpp"

namespace jatran::eval {

/// A positioned replacement over a source token sequence. start == end is a
/// pure insertion; an empty replacement with start < end is a deletion.
struct EditSpan {
  int start = 0;
  int end = 0;  // exclusive
  std::vector<std::string> replacement;

  bool operator==(const EditSpan&) const = default;
};

struct ScoreCounts {
  long matched_edits = 0;
  long system_edits = 0;
  long gold_edits = 0;
  long matched_words = 0;
  long eval_words = 0;
};

struct ScoreReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double f_half = 0.0;
  double accuracy = 0.0;
  ScoreCounts counts;
};

/// Which rows count toward word accuracy. The transliteration rule evaluates
/// JA-labeled rows with a reference; the GEC rule keeps Hebrew and
/// punctuation rows in as well.
enum class AccuracyRule { translit, gec };

struct EvalRow {
  std::string hypothesis;
  std::optional<std::string> reference;
  corpus::TokenLabel label = corpus::TokenLabel::ja;
};

enum class HypColumn { dotted, dotless };

std::vector<EvalRow> make_eval_rows(std::span<const align::ThreeWayRow> rows,
                                    HypColumn column);

/// Fraction of evaluated rows whose hypothesis equals the reference exactly
/// (after Arabic diacritic stripping on the reference). Rows without a
/// reference are never evaluated. Throws NoEvaluableRows when nothing
/// qualifies.
ScoreReport exact_match_accuracy(std::span<const EvalRow> rows,
                                 AccuracyRule rule = AccuracyRule::translit);

/// Converts the minimum-cost monotone word alignment of source→target into
/// spans: each maximal run of non-identical alignment columns is one edit.
std::vector<EditSpan> extract_edits(std::span<const std::string> source,
                                    std::span<const std::string> target,
                                    const align::AlignmentCost& cost = {});

/// Replays spans over the source tokens. Inverse of extract_edits.
std::vector<std::string> apply_edits(std::span<const std::string> source,
                                     std::span<const EditSpan> edits);

/// Edit-level precision/recall/F1/F0.5. An edit matches iff start, end, and
/// replacement are all equal. Empty system edits score precision 1; empty
/// gold edits score recall 1. Throws OverlappingEdits if spans within one
/// list overlap.
ScoreReport m2_score(std::span<const EditSpan> system_edits,
                     std::span<const EditSpan> gold_edits);

/// Micro-aggregation across sections: counts are summed, then divided.
class M2Accumulator {
 public:
  void add(std::span<const EditSpan> system_edits,
           std::span<const EditSpan> gold_edits);
  ScoreReport report() const;

 private:
  ScoreCounts counts_;
};

enum class ErrorCategory {
  valid_paraphrase,
  unnecessary_change,
  alif_hamza,
  wrong_word,
  source_error,
  heb_translation,
  unk_output,
  unclassified,
};

std::string_view category_name(ErrorCategory category);

struct ErrorRow {
  std::string source;     // Hebrew-script token
  std::string translit;   // machine transliteration
  std::string corrected;  // post-correction output
  std::string reference;  // Arabic reference
  corpus::TokenLabel label = corpus::TokenLabel::ja;
};

/// Deterministic cascade over one error row (corrected != reference):
/// UNK placeholder output, Hebrew-labeled source, correction of an already
/// correct transliteration, then pure alif/hamza-class spelling differences.
/// Everything needing human judgment stays unclassified.
ErrorCategory classify_error(const ErrorRow& row);

std::vector<ErrorCategory> classify_errors(std::span<const ErrorRow> rows);

/// Collapses the letter classes the error taxonomy treats as spelling
/// variants: hamzated alifs to bare alif, free-standing hamza carriers
/// removed, teh marbuta to heh, alef maksura to yeh.
std::string collapse_alif_hamza(std::string_view text);

/// MaxMatch annotation format: an `S` line with the source tokens, one
/// `A start end|||NA|||replacement|||REQUIRED|||-NONE-|||0` line per edit,
/// entries separated by blank lines.
void write_m2(std::ostream& out, std::span<const std::string> source_tokens,
              std::span<const EditSpan> edits);

struct M2Entry {
  std::vector<std::string> source_tokens;
  std::vector<EditSpan> edits;
};

std::vector<M2Entry> read_m2(std::istream& in);

/// "P=75.5 R=14.1 F1=23.8 F0.5=40.4" — percentages to one decimal.
std::string format_m2_line(const ScoreReport& report);

/// "accuracy=64.9 (9/14)".
std::string format_accuracy_line(const ScoreReport& report);

}  // namespace jatran::eval
