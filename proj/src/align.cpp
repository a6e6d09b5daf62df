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

#include "jatran/align.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "jatran/errors.hpp"
#include "jatran/script.hpp"
#include "jatran/unicode.hpp"

namespace jatran::align {

namespace {

std::size_t levenshtein(const std::u32string& a, const std::u32string& b) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  std::vector<std::size_t> prev(n + 1);
  std::vector<std::size_t> cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

struct Cell {
  double cost = 0.0;
  int gaps = 0;
  StepKind from = StepKind::pair;
  bool reachable = false;
};

bool better(double cost, int gaps, const Cell& incumbent) {
  if (!incumbent.reachable) return true;
  if (cost != incumbent.cost) return cost < incumbent.cost;
  return gaps < incumbent.gaps;
}

}  // namespace

double AlignmentCost::substitution(std::string_view a, std::string_view b) const {
  const std::u32string ua = utf8::decode(a);
  const std::u32string ub = utf8::decode(b);
  const std::size_t longer = std::max(ua.size(), ub.size());
  if (longer == 0) return 0.0;
  return static_cast<double>(levenshtein(ua, ub)) /
         static_cast<double>(longer);
}

AlignmentPath align_path(std::span<const std::string> hyp,
                         std::span<const std::string> ref,
                         const AlignmentCost& cost) {
  const std::size_t n = hyp.size();
  const std::size_t m = ref.size();
  std::vector<Cell> dp((n + 1) * (m + 1));
  const auto at = [&dp, m](std::size_t i, std::size_t j) -> Cell& {
    return dp[i * (m + 1) + j];
  };
  at(0, 0).reachable = true;

  // Candidates are considered ref_only first so that, on full ties, the
  // backtrace drops trailing reference tokens and pairs earlier ones.
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      Cell& cell = at(i, j);
      if (j > 0) {
        const Cell& p = at(i, j - 1);
        if (better(p.cost + cost.gap_penalty, p.gaps + 1, cell)) {
          cell = {p.cost + cost.gap_penalty, p.gaps + 1, StepKind::ref_only,
                  true};
        }
      }
      if (i > 0 && j > 0) {
        const Cell& p = at(i - 1, j - 1);
        const double c = p.cost + cost.substitution(hyp[i - 1], ref[j - 1]);
        if (better(c, p.gaps, cell)) {
          cell = {c, p.gaps, StepKind::pair, true};
        }
      }
      if (i > 0) {
        const Cell& p = at(i - 1, j);
        if (better(p.cost + cost.gap_penalty, p.gaps + 1, cell)) {
          cell = {p.cost + cost.gap_penalty, p.gaps + 1, StepKind::hyp_only,
                  true};
        }
      }
    }
  }

  AlignmentPath path;
  path.cost = at(n, m).cost;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const StepKind step = at(i, j).from;
    path.steps.push_back(step);
    switch (step) {
      case StepKind::pair: --i; --j; break;
      case StepKind::hyp_only: --i; break;
      case StepKind::ref_only: --j; break;
    }
  }
  std::reverse(path.steps.begin(), path.steps.end());
  return path;
}

std::vector<AlignmentRow> align_section(std::span<const std::string> hyp,
                                        std::span<const std::string> ref,
                                        const AlignmentCost& cost) {
  const AlignmentPath path = align_path(hyp, ref, cost);
  std::vector<AlignmentRow> rows;
  rows.reserve(hyp.size());
  std::size_t i = 0;
  std::size_t j = 0;
  for (StepKind step : path.steps) {
    switch (step) {
      case StepKind::pair:
        rows.push_back({"", corpus::TokenLabel::ja, hyp[i], ref[j]});
        ++i;
        ++j;
        break;
      case StepKind::hyp_only:
        rows.push_back({"", corpus::TokenLabel::ja, hyp[i], std::nullopt});
        ++i;
        break;
      case StepKind::ref_only:
        ++j;  // reference insertion: dropped
        break;
    }
  }
  return rows;
}

ThreeWayResult three_way(const corpus::ParallelCorpus& corpus,
                         const mapping::MappingTable& table,
                         const AlignmentCost& cost) {
  ThreeWayResult result;
  for (const corpus::Section& section : corpus.sections) {
    std::vector<std::string> hyp_dotted(section.source.size());
    std::vector<std::string> hyp_dotless(section.source.size());
    for (std::size_t k = 0; k < section.source.size(); ++k) {
      const std::string& surface = section.source[k].surface;
      for (mapping::TranslitMode mode :
           {mapping::TranslitMode::dotted, mapping::TranslitMode::dotless}) {
        std::string& slot = mode == mapping::TranslitMode::dotted
                                ? hyp_dotted[k]
                                : hyp_dotless[k];
        try {
          slot = mapping::transliterate_token(surface, table, mode);
        } catch (const UnmappableCharacter& e) {
          slot = surface;  // copied verbatim, reported below
          if (mode == mapping::TranslitMode::dotted) {
            result.warnings.push_back("section " +
                                      std::to_string(section.line) + ": `" +
                                      surface + "`: " + e.what());
          }
        }
      }
    }

    std::vector<std::string> ref_tokens;
    ref_tokens.reserve(section.reference.size());
    for (const corpus::Token& t : section.reference) {
      ref_tokens.push_back(t.surface);
    }

    const AlignmentPath path = align_path(hyp_dotted, ref_tokens, cost);
    std::size_t i = 0;
    std::size_t j = 0;
    for (StepKind step : path.steps) {
      if (step == StepKind::ref_only) {
        ++j;
        continue;
      }
      ThreeWayRow row;
      row.section = section.line;
      row.source = section.source[i].surface;
      row.label = section.source[i].label;
      row.hyp_dotted = hyp_dotted[i];
      row.hyp_dotless = hyp_dotless[i];
      if (step == StepKind::pair) {
        row.reference = ref_tokens[j];
        ++j;
      }
      result.rows.push_back(std::move(row));
      ++i;
    }
  }
  return result;
}

void write_alignment_tsv(std::ostream& out, std::span<const ThreeWayRow> rows) {
  for (const ThreeWayRow& row : rows) {
    out << row.section << '\t' << row.source << '\t' << row.hyp_dotted << '\t'
        << row.hyp_dotless << '\t' << (row.reference ? *row.reference : std::string(kUnk))
        << '\t' << corpus::label_name(row.label) << '\n';
  }
}

std::vector<ThreeWayRow> read_alignment_tsv(std::istream& in) {
  std::vector<ThreeWayRow> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 6) {
      throw ConfigError("alignment TSV line " + std::to_string(line_no) +
                        ": expected 6 columns, got " +
                        std::to_string(fields.size()));
    }
    ThreeWayRow row;
    try {
      row.section = std::stoi(fields[0]);
    } catch (const std::exception&) {
      throw ConfigError("alignment TSV line " + std::to_string(line_no) +
                        ": bad section number `" + fields[0] + "`");
    }
    row.source = fields[1];
    row.hyp_dotted = fields[2];
    row.hyp_dotless = fields[3];
    if (fields[4] != kUnk) row.reference = fields[4];
    const std::optional<corpus::TokenLabel> label =
        corpus::label_from_name(fields[5]);
    if (!label) {
      throw ConfigError("alignment TSV line " + std::to_string(line_no) +
                        ": unknown label `" + fields[5] + "`");
    }
    row.label = *label;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace jatran::align
