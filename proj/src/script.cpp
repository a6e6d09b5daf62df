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

#include <algorithm>
#include <array>

#include "jatran/errors.hpp"
#include "jatran/unicode.hpp"

namespace jatran::script {

namespace {

constexpr char32_t kCombiningDotAbove = U'\x0307';
constexpr char32_t kLowerDot = U'\x05C5';

struct Range {
  char32_t lo;
  char32_t hi;
};

constexpr bool in_ranges(char32_t cp, const Range* ranges, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (cp >= ranges[i].lo && cp <= ranges[i].hi) return true;
  }
  return false;
}

// Hebrew points (U+05B0..U+05BD includes the meteg), rafe, shin/sin dots,
// qamats qatan. The upper and lower dots are marks, not points, and are
// handled separately.
constexpr Range kNiqqud[] = {
    {0x05B0, 0x05BD}, {0x05BF, 0x05BF}, {0x05C1, 0x05C2}, {0x05C7, 0x05C7}};

constexpr Range kCantillation[] = {{0x0591, 0x05AF}};

struct FinalPair {
  char32_t final_form;
  char32_t base;
};

constexpr std::array<FinalPair, 5> kFinalForms = {{
    {U'\x05DA', U'\x05DB'},  // ך -> כ
    {U'\x05DD', U'\x05DE'},  // ם -> מ
    {U'\x05DF', U'\x05E0'},  // ן -> נ
    {U'\x05E3', U'\x05E4'},  // ף -> פ
    {U'\x05E5', U'\x05E6'},  // ץ -> צ
}};

// The 28 Arabic letters. U+0621..U+064A minus hamza forms, teh marbuta,
// and alef maksura.
constexpr Range kArabicBaseLetters[] = {
    {0x0627, 0x0628},  // ا ب
    {0x062A, 0x063A},  // ت..غ
    {0x0641, 0x0648},  // ف..و
    {0x064A, 0x064A},  // ي
};

constexpr Range kHamzaForms[] = {{0x0621, 0x0626}};  // ء آ أ ؤ إ ئ

constexpr Range kArabicDiacritics[] = {
    {0x0610, 0x061A},  // honorific and Quranic signs
    {0x064B, 0x065F},  // harakat, shadda, sukun, and neighbors
    {0x0670, 0x0670},  // superscript alef
    {0x06D6, 0x06DC},  // Quranic annotation marks
    {0x06DF, 0x06E4}, {0x06E7, 0x06E8}, {0x06EA, 0x06ED},
};

// General categories P* and S* for the scripts this toolkit processes:
// ASCII, Latin-1 punctuation, Hebrew and Arabic block punctuation, general
// punctuation, currency signs. Digits and letters are deliberately absent.
constexpr Range kPunctOrSymbol[] = {
    {0x0021, 0x002F}, {0x003A, 0x0040}, {0x005B, 0x0060}, {0x007B, 0x007E},
    {0x00A1, 0x00A9}, {0x00AB, 0x00AC}, {0x00AE, 0x00B1}, {0x00B4, 0x00B4},
    {0x00B6, 0x00B8}, {0x00BB, 0x00BB}, {0x00BF, 0x00BF}, {0x00D7, 0x00D7},
    {0x00F7, 0x00F7},
    {0x05BE, 0x05BE},  // maqaf
    {0x05C0, 0x05C0},  // paseq
    {0x05C3, 0x05C3},  // sof pasuq
    {0x05C6, 0x05C6},  // nun hafukha
    {0x05F3, 0x05F4},  // geresh, gershayim
    {0x060C, 0x060F}, {0x061B, 0x061B}, {0x061E, 0x061F},
    {0x066A, 0x066D},  // ٪ ٫ ٬ ٭
    {0x06D4, 0x06D4},  // Arabic full stop
    {0x2010, 0x2027}, {0x2030, 0x205E}, {0x20A0, 0x20BF},
    {0x2190, 0x22FF},  // arrows and math operators
    {0x2E00, 0x2E7F}, {0xFD3E, 0xFD3F},
};

constexpr Range kDigits[] = {
    {0x0030, 0x0039}, {0x0660, 0x0669}, {0x06F0, 0x06F9}};

constexpr Range kSpaces[] = {{0x0009, 0x000D}, {0x0020, 0x0020},
                             {0x00A0, 0x00A0}, {0x2000, 0x200A},
                             {0x2028, 0x2029}, {0x205F, 0x205F},
                             {0x3000, 0x3000}};

constexpr Range kGenericCombining[] = {{0x0300, 0x036F}};

bool is_hebrew_block(char32_t cp) { return cp >= 0x0590 && cp <= 0x05FF; }

}  // namespace

bool is_hebrew_final_letter(char32_t cp) {
  return std::any_of(kFinalForms.begin(), kFinalForms.end(),
                     [cp](FinalPair p) { return p.final_form == cp; });
}

bool is_hebrew_base_letter(char32_t cp) {
  return cp >= 0x05D0 && cp <= 0x05EA && !is_hebrew_final_letter(cp);
}

bool is_hebrew_letter(char32_t cp) {
  return cp >= 0x05D0 && cp <= 0x05EA;
}

char32_t final_to_base(char32_t cp) {
  for (FinalPair p : kFinalForms) {
    if (p.final_form == cp) return p.base;
  }
  return cp;
}

bool is_niqqud(char32_t cp) {
  return in_ranges(cp, kNiqqud, std::size(kNiqqud));
}

bool is_cantillation(char32_t cp) {
  return in_ranges(cp, kCantillation, std::size(kCantillation));
}

bool is_hebrew_mark(char32_t cp) {
  return is_niqqud(cp) || is_cantillation(cp) || cp == kUpperDot ||
         cp == kLowerDot;
}

bool is_arabic_letter(char32_t cp) {
  return in_ranges(cp, kArabicBaseLetters, std::size(kArabicBaseLetters)) ||
         in_ranges(cp, kHamzaForms, std::size(kHamzaForms)) ||
         cp == U'\x0629' || cp == U'\x0649';
}

bool is_arabic_diacritic(char32_t cp) {
  return in_ranges(cp, kArabicDiacritics, std::size(kArabicDiacritics));
}

bool is_punct_or_symbol(char32_t cp) {
  return in_ranges(cp, kPunctOrSymbol, std::size(kPunctOrSymbol));
}

bool is_digit(char32_t cp) { return in_ranges(cp, kDigits, std::size(kDigits)); }

bool is_space(char32_t cp) { return in_ranges(cp, kSpaces, std::size(kSpaces)); }

HebrewChar classify_hebrew(char32_t cp) {
  if (is_hebrew_base_letter(cp)) return {cp, HebrewKind::base_letter, cp};
  if (is_hebrew_final_letter(cp))
    return {cp, HebrewKind::final_form_letter, final_to_base(cp)};
  if (cp == kUpperDot) return {cp, HebrewKind::upper_dot_mark, cp};
  if (is_niqqud(cp)) return {cp, HebrewKind::niqqud_mark, cp};
  if (is_hebrew_block(cp)) return {cp, HebrewKind::other_mark, cp};
  if (in_ranges(cp, kGenericCombining, std::size(kGenericCombining)))
    return {cp, HebrewKind::other_mark, cp};
  if (is_punct_or_symbol(cp)) return {cp, HebrewKind::other_mark, cp};
  throw NotHebrewScript("not a Hebrew-script scalar: " + utf8::u_plus(cp));
}

ArabicChar classify_arabic(char32_t cp) {
  if (cp == U'\x0629') return {cp, ArabicKind::teh_marbuta};
  if (in_ranges(cp, kHamzaForms, std::size(kHamzaForms)))
    return {cp, ArabicKind::hamza_form};
  if (in_ranges(cp, kArabicBaseLetters, std::size(kArabicBaseLetters)))
    return {cp, ArabicKind::base_letter};
  if (is_arabic_diacritic(cp)) return {cp, ArabicKind::diacritic};
  return {cp, ArabicKind::other};
}

std::string canonicalize_upper_dots(std::string_view text) {
  std::u32string cps = utf8::decode(text);
  char32_t last_base = 0;
  for (char32_t& cp : cps) {
    if (cp == kCombiningDotAbove && is_hebrew_letter(last_base)) {
      cp = kUpperDot;
      continue;
    }
    if (!is_hebrew_mark(cp) && cp != kCombiningDotAbove) last_base = cp;
  }
  return utf8::encode(cps);
}

std::string normalize(std::string_view text, const NormalizationPolicy& policy) {
  std::u32string cps = utf8::decode(canonicalize_upper_dots(text));
  std::u32string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (is_cantillation(cp) || cp == kLowerDot) continue;
    if (policy.strip_niqqud && is_niqqud(cp)) continue;
    if (policy.strip_upper_dot && cp == kUpperDot) continue;
    if (policy.strip_arabic_diacritics && is_arabic_diacritic(cp)) continue;
    if (policy.normalize_final_forms) cp = final_to_base(cp);
    out.push_back(cp);
  }
  return utf8::encode(out);
}

bool is_punctuation_token(std::string_view token) {
  if (token.empty()) throw EmptyToken("empty token");
  for (char32_t cp : utf8::decode(token)) {
    if (!is_punct_or_symbol(cp)) return false;
  }
  return true;
}

bool contains_niqqud(std::string_view token) {
  for (char32_t cp : utf8::decode(token)) {
    if (is_niqqud(cp)) return true;
  }
  return false;
}

}  // namespace jatran::script
