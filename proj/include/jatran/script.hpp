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
// Unicode inventories, character classification, and normalization for
// Hebrew-script Judeo-Arabic and Arabic-script text. Storage order only;
// no shaping or bidi rendering.

#pragma once

#include <string>
#include <string_view>

namespace jatran::script {

/// The combining mark that distinguishes the seven dotted Judeo-Arabic
/// letter variants (HEBREW MARK UPPER DOT).
inline constexpr char32_t kUpperDot = U'\x05C4';

enum class HebrewKind {
  base_letter,        // the 22 letters
  final_form_letter,  // ך ם ן ף ץ
  upper_dot_mark,     // U+05C4 only
  niqqud_mark,        // Hebrew points plus the meteg
  other_mark,         // cantillation, in-block punctuation, shared marks
};

struct HebrewChar {
  char32_t codepoint;
  HebrewKind kind;
  /// For final forms, the regular letter; otherwise the code point itself.
  char32_t base;
};

enum class ArabicKind {
  base_letter,  // the 28 letters
  teh_marbuta,  // ة
  hamza_form,   // ء آ أ ؤ إ ئ
  diacritic,    // harakat, shadda, sukun, superscript alef, Quranic marks
  other,
};

struct ArabicChar {
  char32_t codepoint;
  ArabicKind kind;
};

/// Pure configuration for normalize(). Applying the same policy twice equals
/// applying it once.
struct NormalizationPolicy {
  bool strip_niqqud = false;
  bool strip_upper_dot = false;
  bool strip_arabic_diacritics = false;
  bool normalize_final_forms = false;
};

bool is_hebrew_base_letter(char32_t cp);
bool is_hebrew_final_letter(char32_t cp);
/// Base or final form.
bool is_hebrew_letter(char32_t cp);
/// ך→כ ם→מ ן→נ ף→פ ץ→צ; identity for everything else.
char32_t final_to_base(char32_t cp);
bool is_niqqud(char32_t cp);
bool is_cantillation(char32_t cp);
/// Any combining mark of the Hebrew block (points, accents, dots).
bool is_hebrew_mark(char32_t cp);

bool is_arabic_letter(char32_t cp);
bool is_arabic_diacritic(char32_t cp);

bool is_punct_or_symbol(char32_t cp);
bool is_digit(char32_t cp);
bool is_space(char32_t cp);

/// Classifies a scalar for Hebrew-script processing. Total over the Hebrew
/// block; shared punctuation and generic combining marks classify as
/// other_mark. Throws NotHebrewScript for anything else.
HebrewChar classify_hebrew(char32_t cp);

/// Classifies a scalar for Arabic-script processing (total function).
ArabicChar classify_arabic(char32_t cp);

/// Rewrites a generic combining dot above (U+0307) that follows a Hebrew
/// letter to the Hebrew upper dot. Real texts are inconsistent about which
/// mark they use; canonicalizing keeps the mapper's key space small.
std::string canonicalize_upper_dots(std::string_view text);

/// Removes marks selected by the policy and rewrites final forms when asked.
/// Cantillation marks and the lower dot are always removed. Letter order is
/// preserved; digits pass through untouched. Idempotent for every policy.
std::string normalize(std::string_view text, const NormalizationPolicy& policy);

/// True iff every scalar in the token is punctuation or a symbol
/// (general categories P* and S*); digits are not punctuation.
/// Throws EmptyToken on the empty string.
bool is_punctuation_token(std::string_view token);

/// True iff the token carries at least one niqqud mark (upper dot excluded).
bool contains_niqqud(std::string_view token);

}  // namespace jatran::script
