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
// Word-level alignment of a machine transliteration to the Arabic reference:
// minimum-cost monotone alignment with UNK insertion for unmatched hypothesis
// tokens and dropping of unmatched reference tokens.

#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jatran/corpus.hpp"
#include "jatran/mapping.hpp"

namespace jatran::align {

/// Spelled literally in every serialized format.
inline constexpr std::string_view kUnk = "UNK";

/// Substitution cost is character edit distance normalized to [0,1];
/// the gap penalty prices an unaligned token on either side. Defaults make
/// exact matches free, near-matches cheap, and a substitution always cheaper
/// than an insertion/deletion pair.
struct AlignmentCost {
  double gap_penalty = 0.6;

  /// Levenshtein(a, b) / max(|a|, |b|) over code points; 0 for two empties.
  double substitution(std::string_view a, std::string_view b) const;
};

enum class StepKind { pair, hyp_only, ref_only };

struct AlignmentPath {
  std::vector<StepKind> steps;
  double cost = 0.0;
};

/// Minimum-cost monotone path through (hyp, ref). Ties prefer fewer gap
/// moves (substitution over insertion+deletion), then earlier reference
/// consumption. Deterministic.
AlignmentPath align_path(std::span<const std::string> hyp,
                         std::span<const std::string> ref,
                         const AlignmentCost& cost = {});

struct AlignmentRow {
  std::string source;  // Hebrew-script surface; empty for string-level runs
  corpus::TokenLabel label = corpus::TokenLabel::ja;
  std::string hypothesis;
  std::optional<std::string> reference;  // nullopt serializes as UNK
};

/// One row per hypothesis token, in order; unmatched hypothesis tokens get
/// an absent reference, unmatched reference tokens are dropped.
std::vector<AlignmentRow> align_section(std::span<const std::string> hyp,
                                        std::span<const std::string> ref,
                                        const AlignmentCost& cost = {});

struct ThreeWayRow {
  int section = 0;
  std::string source;
  corpus::TokenLabel label = corpus::TokenLabel::ja;
  std::string hyp_dotted;
  std::string hyp_dotless;
  std::optional<std::string> reference;
};

struct ThreeWayResult {
  std::vector<ThreeWayRow> rows;
  std::vector<std::string> warnings;
};

/// Transliterates the source side (dotted mode), aligns it against the
/// reference per section, attaches source tokens and labels positionally,
/// and fills the dotless column by re-transliterating the same tokens with
/// upper dots stripped. Unmappable tokens pass through verbatim and are
/// reported as warnings.
ThreeWayResult three_way(const corpus::ParallelCorpus& corpus,
                         const mapping::MappingTable& table,
                         const AlignmentCost& cost = {});

/// Tab-separated columns: section, source, hypothesis_dotted,
/// hypothesis_dotless, reference (UNK when absent), label. No header.
void write_alignment_tsv(std::ostream& out, std::span<const ThreeWayRow> rows);

std::vector<ThreeWayRow> read_alignment_tsv(std::istream& in);

}  // namespace jatran::align
