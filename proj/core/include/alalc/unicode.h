// Copyright 2026 The alalc Authors.
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

#ifndef ALALC_UNICODE_H_
#define ALALC_UNICODE_H_

#include <string>
#include <string_view>

namespace alalc {

// UTF-8 <-> UTF-32 conversion. Ill-formed sequences become U+FFFD.
std::u32string to_u32(std::string_view utf8);
std::string to_utf8(std::u32string_view text);
std::string to_utf8(char32_t c);

std::string nfc(std::string_view utf8);
bool is_nfc(std::string_view utf8);

// Unicode default full case folding.
std::string case_fold(std::string_view utf8);
std::u32string case_fold(std::u32string_view text);

char32_t to_upper(char32_t c);

// True for letters that have case (the targets of capitalization rules).
// Modifier letters such as U+02BB (ʻayn) and U+02BC (hamza) are not cased.
bool is_cased_letter(char32_t c);
bool is_letter(char32_t c);
bool is_decimal_digit(char32_t c);
bool is_whitespace(char32_t c);
// General category P*.
bool is_general_punctuation(char32_t c);
bool is_nonspacing_mark(char32_t c);

// U+0600..U+06FF, U+0750..U+077F, U+08A0..U+08FF and the presentation forms.
bool in_arabic_block(char32_t c);
bool is_arabic_letter(char32_t c);
// Arabic-block non-spacing marks: short vowels, tanwin, shadda, sukun,
// dagger alif, Quranic annotation marks.
bool is_arabic_diacritic(char32_t c);

// "U+0651" style name used in diagnostics.
std::string codepoint_name(char32_t c);

}  // namespace alalc

#endif  // ALALC_UNICODE_H_
