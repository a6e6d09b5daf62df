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

#include "jatran/script.hpp"

#include <doctest.h>

#include <random>

#include "jatran/errors.hpp"
#include "jatran/unicode.hpp"

using namespace jatran;
using script::HebrewKind;
using script::NormalizationPolicy;

namespace {

// Random Hebrew-ish text: letters, niqqud, upper dots, spaces, digits.
std::string random_hebrew_text(std::mt19937& rng) {
  static constexpr char32_t kPool[] = {
      U'\x05D0', U'\x05D1', U'\x05D2', U'\x05DB', U'\x05DA', U'\x05DD',
      U'\x05EA', U'\x05B0', U'\x05B5', U'\x05B7', U'\x05BC', U'\x05C4',
      U'\x0591', U'\x05A8', U' ',      U'3',      U'.',      U'\x0642'};
  std::uniform_int_distribution<int> len(0, 20);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kPool) - 1);
  std::string out;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) utf8::append(out, kPool[pick(rng)]);
  return out;
}

// Letter skeleton with final forms folded; the part normalize must not touch.
std::u32string letter_skeleton(std::string_view text) {
  std::u32string out;
  for (char32_t cp : utf8::decode(text)) {
    if (script::is_hebrew_letter(cp)) out.push_back(script::final_to_base(cp));
  }
  return out;
}

}  // namespace

TEST_CASE("classify_hebrew kinds") {
  CHECK(script::classify_hebrew(U'\x05E7').kind == HebrewKind::base_letter);
  const script::HebrewChar final_kaf = script::classify_hebrew(U'\x05DA');
  CHECK(final_kaf.kind == HebrewKind::final_form_letter);
  CHECK(final_kaf.base == U'\x05DB');
  CHECK(script::classify_hebrew(script::kUpperDot).kind ==
        HebrewKind::upper_dot_mark);
  CHECK(script::classify_hebrew(U'\x05B7').kind == HebrewKind::niqqud_mark);
  CHECK(script::classify_hebrew(U'\x05BD').kind == HebrewKind::niqqud_mark);
  CHECK(script::classify_hebrew(U'\x0591').kind == HebrewKind::other_mark);
  CHECK(script::classify_hebrew(U'\x05BE').kind == HebrewKind::other_mark);
  CHECK(script::classify_hebrew(U',').kind == HebrewKind::other_mark);
  CHECK(script::classify_hebrew(U'\x0307').kind == HebrewKind::other_mark);
  CHECK_THROWS_AS(script::classify_hebrew(U'x'), NotHebrewScript);
  CHECK_THROWS_AS(script::classify_hebrew(U'\x0627'), NotHebrewScript);
  CHECK_THROWS_AS(script::classify_hebrew(U'7'), NotHebrewScript);
}

TEST_CASE("classify_hebrew is total over the Hebrew block") {
  int base = 0;
  int finals = 0;
  for (char32_t cp = 0x0590; cp <= 0x05FF; ++cp) {
    const script::HebrewChar c = script::classify_hebrew(cp);
    if (c.kind == HebrewKind::base_letter) ++base;
    if (c.kind == HebrewKind::final_form_letter) ++finals;
  }
  CHECK(base == 22);
  CHECK(finals == 5);
}

TEST_CASE("classify_arabic kinds") {
  CHECK(script::classify_arabic(U'\x0628').kind == script::ArabicKind::base_letter);
  CHECK(script::classify_arabic(U'\x0629').kind == script::ArabicKind::teh_marbuta);
  CHECK(script::classify_arabic(U'\x0647').kind == script::ArabicKind::base_letter);
  CHECK(script::classify_arabic(U'\x0621').kind == script::ArabicKind::hamza_form);
  CHECK(script::classify_arabic(U'\x0623').kind == script::ArabicKind::hamza_form);
  CHECK(script::classify_arabic(U'\x064E').kind == script::ArabicKind::diacritic);
  CHECK(script::classify_arabic(U'\x0640').kind == script::ArabicKind::other);

  int letters = 0;
  for (char32_t cp = 0x0600; cp <= 0x06FF; ++cp) {
    if (script::classify_arabic(cp).kind == script::ArabicKind::base_letter) {
      ++letters;
    }
  }
  CHECK(letters == 28);
}

TEST_CASE("normalize strips the selected marks") {
  // דׄלך with the dot stripped
  CHECK(script::normalize("דׄלך",
                          {.strip_upper_dot = true}) == "דלך");
  // אֵל with niqqud stripped
  CHECK(script::normalize("אֵל", {.strip_niqqud = true}) ==
        "אל");
  CHECK(script::normalize("", {.strip_niqqud = true}).empty());

  // Arabic diacritic stripping, checked against a hand-filtered oracle.
  const std::string diacritized = "قَالَ";  // qāla
  std::string oracle;
  for (char32_t cp : utf8::decode(diacritized)) {
    if (cp < 0x064B || cp > 0x0652) utf8::append(oracle, cp);
  }
  CHECK(script::normalize(diacritized, {.strip_arabic_diacritics = true}) ==
        oracle);
  CHECK(oracle == "قال");
}

TEST_CASE("normalize folds final forms and keeps digits") {
  CHECK(script::normalize("וכיף",
                          {.normalize_final_forms = true}) ==
        "וכיפ");
  CHECK(script::normalize("12א", {.strip_niqqud = true,
                                       .strip_upper_dot = true,
                                       .strip_arabic_diacritics = true}) ==
        "12א");
}

TEST_CASE("normalize always removes cantillation") {
  CHECK(script::normalize("א֑ל", {}) == "אל");
}

TEST_CASE("canonicalize_upper_dots rewrites the generic dot above") {
  CHECK(script::canonicalize_upper_dots("כ̇") == "כׄ");
  // After niqqud on the same letter, still in Hebrew context.
  CHECK(script::canonicalize_upper_dots("כַ̇") ==
        "כַׄ");
  // Not after a Hebrew letter: left alone.
  CHECK(script::canonicalize_upper_dots("ẋ") == "ẋ");
}

TEST_CASE("normalize is idempotent and preserves the letter skeleton") {
  std::mt19937 rng(20260810);
  const NormalizationPolicy policies[] = {
      {},
      {.strip_niqqud = true},
      {.strip_upper_dot = true},
      {.strip_niqqud = true, .strip_upper_dot = true,
       .strip_arabic_diacritics = true, .normalize_final_forms = true},
  };
  for (int iter = 0; iter < 200; ++iter) {
    const std::string text = random_hebrew_text(rng);
    for (const NormalizationPolicy& p : policies) {
      const std::string once = script::normalize(text, p);
      CHECK(script::normalize(once, p) == once);
      CHECK(letter_skeleton(once) == letter_skeleton(text));
    }
  }
}

TEST_CASE("is_punctuation_token") {
  CHECK(script::is_punctuation_token(","));
  CHECK(script::is_punctuation_token("."));
  CHECK(script::is_punctuation_token("؟!"));  // ؟!
  CHECK(script::is_punctuation_token("־"));        // maqaf
  CHECK_FALSE(script::is_punctuation_token("קאל"));
  CHECK_FALSE(script::is_punctuation_token("12"));
  CHECK_FALSE(script::is_punctuation_token("1."));
  CHECK_FALSE(script::is_punctuation_token("٠"));  // Arabic-Indic zero
  CHECK_THROWS_AS(script::is_punctuation_token(""), EmptyToken);
}

TEST_CASE("contains_niqqud ignores the upper dot") {
  CHECK(script::contains_niqqud("אֵל"));
  CHECK_FALSE(script::contains_niqqud("אלכׄ"));
  CHECK_FALSE(script::contains_niqqud("א֑"));  // cantillation only
}

TEST_CASE("utf8 round trip and validation") {
  const std::string text = "קאל abc قال";
  CHECK(utf8::encode(utf8::decode(text)) == text);
  CHECK_THROWS_AS(utf8::decode("\xFF"), InvalidEncoding);
  CHECK_THROWS_AS(utf8::decode("\xC0\xAF"), InvalidEncoding);  // overlong
  CHECK_THROWS_AS(utf8::decode("\xED\xA0\x80"), InvalidEncoding);  // surrogate
  CHECK_THROWS_AS(utf8::decode(std::string_view("\xD7", 1)), InvalidEncoding);
}
