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
// Golden data shared by the unit and acceptance suites. Escaped so the
// exact code points are visible; bidi rendering of raw literals hides
// combining marks and byte order.

#pragma once

#include <string_view>

#include "jatran/corpus.hpp"
#include "jatran/evaluate.hpp"

namespace fixtures {

// A dialogue opener: two dotted letters, a Hebrew borrowing, a final
// teh marbuta written as he, and an unwritten hamza. Raw lines carry
// attached punctuation to exercise separation.
inline constexpr std::string_view kSentenceSource = "\u05E7\u05D0\u05DC \u05D0\u05DC\u05DB\u05C4\u05D6\u05E8\u05D9, \u05D5\u05DB\u05D9\u05E3 \u05D3\u05C4\u05DC\u05DA \u05D5\u05D0\u05DC\u05D1\u05E8\u05DB\u05D5\u05EA \u05DB\u05DC\u05E4\u05D4 \u05D6\u05D0\u05D9\u05D3\u05D4.";
inline constexpr std::string_view kSentenceReference = "\u0642\u0627\u0644 \u0627\u0644\u062E\u0632\u0631\u064A: \u0648\u0643\u064A\u0641 \u0630\u0644\u0643 \u0648\u0627\u0644\u062A\u0633\u0628\u064A\u062D\u0627\u062A \u0643\u0644\u0641\u0629 \u0632\u0627\u0626\u062F\u0629.";

struct TranslitCase {
  std::string_view source;
  std::string_view dotted;
  std::string_view dotless;
};

// Separated tokens of kSentenceSource with their expected output in both
// modes. Four words survive against the reference; the borrowing and the
// two orthographic gaps do not.
inline constexpr TranslitCase kSentenceTokens[] = {
    {"\u05E7\u05D0\u05DC", "\u0642\u0627\u0644", "\u0642\u0627\u0644"},  // said
    {"\u05D0\u05DC\u05DB\u05C4\u05D6\u05E8\u05D9", "\u0627\u0644\u062E\u0632\u0631\u064A", "\u0627\u0644\u0643\u0632\u0631\u064A"},  // al-Khazari
    {",", ",", ","},
    {"\u05D5\u05DB\u05D9\u05E3", "\u0648\u0643\u064A\u0641", "\u0648\u0643\u064A\u0641"},  // and how
    {"\u05D3\u05C4\u05DC\u05DA", "\u0630\u0644\u0643", "\u062F\u0644\u0643"},  // is that
    {"\u05D5\u05D0\u05DC\u05D1\u05E8\u05DB\u05D5\u05EA", "\u0648\u0627\u0644\u0628\u0631\u0643\u0648\u062A", "\u0648\u0627\u0644\u0628\u0631\u0643\u0648\u062A"},  // and the blessings (Hebrew borrowing)
    {"\u05DB\u05DC\u05E4\u05D4", "\u0643\u0644\u0641\u0647", "\u0643\u0644\u0641\u0647"},  // burden (final teh marbuta written as he)
    {"\u05D6\u05D0\u05D9\u05D3\u05D4", "\u0632\u0627\u064A\u062F\u0647", "\u0632\u0627\u064A\u062F\u0647"},  // extra (hamza unwritten)
    {".", ".", "."},
};

inline constexpr std::string_view kSentenceReferenceTokens[] = {
    "\u0642\u0627\u0644", "\u0627\u0644\u062E\u0632\u0631\u064A", ":", "\u0648\u0643\u064A\u0641", "\u0630\u0644\u0643", "\u0648\u0627\u0644\u062A\u0633\u0628\u064A\u062D\u0627\u062A", "\u0643\u0644\u0641\u0629", "\u0632\u0627\u0626\u062F\u0629", ".",
};

// Minimal pairs where the upper dot decides the consonant.
inline constexpr TranslitCase kDisambiguationTriple[] = {
    {"\u05D9\u05DB\u05C4\u05D0\u05D8\u05D1\u05D4", "\u064A\u062E\u0627\u0637\u0628\u0647", "\u064A\u0643\u0627\u0637\u0628\u0647"},  // he speaks to him
    {"\u05DE\u05E8\u05E6\u05C4\u05D9", "\u0645\u0631\u0636\u064A", "\u0645\u0631\u0635\u064A"},  // satisfactory
    {"\u05EA\u05D2\u05C4\u05D9\u05E8", "\u062A\u063A\u064A\u0631", "\u062A\u062C\u064A\u0631"},  // he changed
};

struct DottedCase {
  std::string_view source;
  std::string_view expected;
};

// Dot placement cases, including the misplacement that maps he to teh
// marbuta mid-word.
inline constexpr DottedCase kDotPlacementCases[] = {
    {"\u05D1\u05DC\u05D2\u05C4\u05D4\u05C4", "\u0628\u0644\u063A\u0629"},  // in a language
    {"\u05D1\u05DC\u05D2\u05D4\u05C4", "\u0628\u0644\u062C\u0629"},  // same with gimel dot omitted
    {"\u05D5\u05D4\u05C4\u05D3\u05D0", "\u0648\u0629\u062F\u0627"},  // misplaced dot lands on he
    {"\u05D5\u05D4\u05D3\u05C4\u05D0", "\u0648\u0647\u0630\u0627"},  // and this
    {"\u05D9\u05E0\u05E9\u05D0", "\u064A\u0646\u0634\u0627"},  // final hamza unwritten
};

// Upper dots that mark an abbreviation or a numeral, not a consonant.
inline constexpr DottedCase kAbbreviationDot = {"\u05EA\u05E2\u05C4", "\u062A\u0639"};
inline constexpr DottedCase kNumeralDots = {"\u05DE\u05C4\u05D3\u05C4", "\u0645\u0630"};

// A section whose alignment exercises every row shape: exact pairs,
// near-matches, diacritized Hebrew tokens the reference translates,
// an unmatched hypothesis word, and trailing punctuation with no
// reference counterpart.
inline constexpr std::string_view kAlignSectionSource = "\u05E4\u05D9\u05E6\u05D9\u05E8 \u05E2\u05E0\u05D3\u05E0\u05D0 \u05DE\u05E8\u05D4 \u05D0\u05B5\u05DC \u05E8\u05B7\u05D7\u05D5\u05BC\u05DD \u05D5\u05B0\u05D7\u05B7\u05E0\u05BC\u05D5\u05BC\u05DF \u05D5\u05DE\u05E8\u05D4 \u05D0\u05B5\u05DC \u05E7\u05B7\u05E0\u05B9\u05BC\u05D0 \u05D5\u05B0\u05E0\u05D5\u05B9\u05E7\u05B5\u05DD,";
inline constexpr std::string_view kAlignSectionReference = "\u0641\u064A\u0635\u064A\u0631 \u0639\u0646\u062F\u0646\u0627 \u0645\u0631\u0629 \u0625\u0644\u0647 \u0631\u062D\u064A\u0645 \u0648\u0631\u0621\u0648\u0641 \u0648\u0645\u0631\u0629 \u0625\u0644\u0647 \u0648\u0645\u0646\u062A\u0642\u0645";

// Expected alignment TSV for an ingest of the section above on its own.
inline constexpr std::string_view kAlignSectionTsv =
    "1\t\u05E4\u05D9\u05E6\u05D9\u05E8\t\u0641\u064A\u0635\u064A\u0631\t\u0641\u064A\u0635\u064A\u0631\t\u0641\u064A\u0635\u064A\u0631\tJA\n"
    "1\t\u05E2\u05E0\u05D3\u05E0\u05D0\t\u0639\u0646\u062F\u0646\u0627\t\u0639\u0646\u062F\u0646\u0627\t\u0639\u0646\u062F\u0646\u0627\tJA\n"
    "1\t\u05DE\u05E8\u05D4\t\u0645\u0631\u0647\t\u0645\u0631\u0647\t\u0645\u0631\u0629\tJA\n"
    "1\t\u05D0\u05B5\u05DC\t\u0627\u0644\t\u0627\u0644\t\u0625\u0644\u0647\tHeb\n"
    "1\t\u05E8\u05B7\u05D7\u05D5\u05BC\u05DD\t\u0631\u062D\u0648\u0645\t\u0631\u062D\u0648\u0645\t\u0631\u062D\u064A\u0645\tHeb\n"
    "1\t\u05D5\u05B0\u05D7\u05B7\u05E0\u05BC\u05D5\u05BC\u05DF\t\u0648\u062D\u0646\u0648\u0646\t\u0648\u062D\u0646\u0648\u0646\t\u0648\u0631\u0621\u0648\u0641\tHeb\n"
    "1\t\u05D5\u05DE\u05E8\u05D4\t\u0648\u0645\u0631\u0647\t\u0648\u0645\u0631\u0647\t\u0648\u0645\u0631\u0629\tJA\n"
    "1\t\u05D0\u05B5\u05DC\t\u0627\u0644\t\u0627\u0644\t\u0625\u0644\u0647\tHeb\n"
    "1\t\u05E7\u05B7\u05E0\u05B9\u05BC\u05D0\t\u0642\u0646\u0627\t\u0642\u0646\u0627\tUNK\tHeb\n"
    "1\t\u05D5\u05B0\u05E0\u05D5\u05B9\u05E7\u05B5\u05DD\t\u0648\u0646\u0648\u0642\u0645\t\u0648\u0646\u0648\u0642\u0645\t\u0648\u0645\u0646\u062A\u0642\u0645\tHeb\n"
    "1\t,\t,\t,\tUNK\tPunc\n";

struct ErrorCase {
  std::string_view source;
  std::string_view translit;
  std::string_view corrected;
  std::string_view reference;
  jatran::corpus::TokenLabel label;
  jatran::eval::ErrorCategory expected;
};

inline const ErrorCase kErrorCases[] = {
    {"\u05E7\u05D0\u05DC", "\u0642\u0627\u0644", "\u0642\u0627\u0644", "\u0641\u0642\u0627\u0644",
     jatran::corpus::TokenLabel::ja,
     jatran::eval::ErrorCategory::unclassified},  // valid paraphrase; needs human judgment
    {"\u05DB\u05C4\u05DC\u05E7\u05D4\u05C4", "\u062E\u0644\u0642\u0629", "\u062E\u0644\u0642", "\u062E\u0644\u0642\u0629",
     jatran::corpus::TokenLabel::ja,
     jatran::eval::ErrorCategory::unnecessary_change},  // correction clobbered a correct transliteration
    {"\u05D0\u05DC\u05D0\u05D1", "\u0627\u0644\u0627\u0628", "\u0627\u0644\u0622\u0628", "\u0627\u0644\u0623\u0628",
     jatran::corpus::TokenLabel::ja,
     jatran::eval::ErrorCategory::alif_hamza},  // wrong hamza carrier
    {"\u05D5\u05EA\u05E1\u05DC\u05D9\u05DD", "\u0648\u062A\u0633\u0644\u064A\u0645", "\u0648\u0625\u0646\u062C\u0627\u0621", "\u0648\u062A\u0633\u0644\u064A\u0645",
     jatran::corpus::TokenLabel::ja,
     jatran::eval::ErrorCategory::unclassified},  // wrong word; needs human judgment
    {"\u05D0\u05E0\u05D4", "\u0627\u0646\u0647", "\u0625\u0646\u0647", "\u0623\u0646\u0627",
     jatran::corpus::TokenLabel::ja,
     jatran::eval::ErrorCategory::unclassified},  // source-side spelling error; needs human judgment
    {"\u05D5\u05D4\u05DE\u05E9\u05DB\u05D9\u05DC\u05D9\u05DD", "\u0648\u0647\u0645\u0634\u0643\u064A\u0644\u064A\u0645", "\u0648\u0647\u0645\u0634\u0643\u064A\u0644\u064A\u0645", "\u0648\u0627\u0644\u0639\u0642\u0644\u0627\u0621",
     jatran::corpus::TokenLabel::hebrew,
     jatran::eval::ErrorCategory::heb_translation},  // reference translates the Hebrew word
    {"\u05D1\u05D4\u05D0", "\u0628\u0647\u0627", "UNK", "\u0628\u0647\u0627",
     jatran::corpus::TokenLabel::ja,
     jatran::eval::ErrorCategory::unk_output},  // backend emitted the placeholder
};

}  // namespace fixtures
