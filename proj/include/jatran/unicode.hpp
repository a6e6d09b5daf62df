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

#pragma once

#include <string>
#include <string_view>

namespace jatran::utf8 {

/// Decodes UTF-8 into code points. Throws InvalidEncoding on malformed input
/// (truncated sequences, overlong encodings, surrogates, out-of-range values).
std::u32string decode(std::string_view text);

/// Encodes code points back to UTF-8.
std::string encode(std::u32string_view code_points);

/// Appends one code point to a UTF-8 string.
void append(std::string& out, char32_t cp);

/// Formats a code point as "U+XXXX" for diagnostics.
std::string u_plus(char32_t cp);

}  // namespace jatran::utf8
