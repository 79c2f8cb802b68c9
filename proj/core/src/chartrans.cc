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
#include "alalc/chartrans.h"

#include <algorithm>
#include <array>

#include "alalc/unicode.h"

namespace alalc {
namespace {

constexpr char32_t kShadda = 0x0651;

bool is_sun_letter(char32_t c) {
  return std::u32string_view(U"تثدذرزسشصضطظلن").find(c) !=
         std::u32string_view::npos;
}

// Romanized proclitic segments that entry-initial capitalization skips.
bool is_clitic_segment(std::u32string_view segment) {
  static const std::array<std::u32string_view, 10> kClitics = {
      U"al", U"wa", U"fa", U"bi", U"li", U"ka", U"la", U"lil", U"sa", U"wal"};
  const std::u32string folded = case_fold(segment);
  return std::find(kClitics.begin(), kClitics.end(), folded) != kClitics.end();
}

bool has_letter(std::string_view text) {
  const std::u32string u = to_u32(text);
  return std::any_of(u.begin(), u.end(), is_letter);
}

}  // namespace

std::u32string canonicalize_for_rules(std::u32string_view text) {
  std::u32string out = to_u32(nfc(to_utf8(text)));
  for (std::size_t i = 0; i < out.size();) {
    if (!is_arabic_diacritic(out[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < out.size() && is_arabic_diacritic(out[end])) ++end;
    std::stable_partition(out.begin() + i, out.begin() + end,
                          [](char32_t c) { return c == kShadda; });
    i = end;
  }
  // Article position: word start, or after one proclitic letter and its marks.
  std::size_t start = 0;
  if (!out.empty() && std::u32string_view(U"وفبك").find(out[0]) !=
                          std::u32string_view::npos) {
    std::size_t k = 1;
    while (k < out.size() && is_arabic_diacritic(out[k])) ++k;
    if (k + 1 < out.size() && out[k] == U'ا' && out[k + 1] == U'ل') start = k;
  }
  if (start + 1 < out.size() && (out[start] == U'ا' || out[start] == U'ٱ') &&
      out[start + 1] == U'ل') {
    std::size_t j = start + 2;
    while (j < out.size() && is_arabic_diacritic(out[j])) ++j;
    if (j + 1 < out.size() && is_sun_letter(out[j]) && out[j + 1] == kShadda) {
      out.erase(j + 1, 1);
    }
  }
  return out;
}

std::string apply_rules(std::u32string_view canonical, const RuleTable& table,
                        Diagnostics* diag) {
  std::string out;
  std::size_t pos = 0;
  while (pos < canonical.size()) {
    if (auto m = table.match_at(canonical, pos)) {
      out += m->rule->replacement;
      pos += m->length;
      continue;
    }
    if (diag != nullptr) ++diag->unmapped[canonical[pos]];
    out += to_utf8(canonical[pos]);
    ++pos;
  }
  return nfc(out);
}

RomanToken chartrans_word(const ArabicToken& token, const RuleTable& table,
                          Diagnostics* diag) {
  if (token.kind != TokenKind::kWord) {
    return {romanize_neutral(token.written()), Provenance::kCharTrans};
  }
  if (const std::string* value = table.exception(token.surface)) {
    return {*value, Provenance::kCharTrans};
  }
  return {apply_rules(canonicalize_for_rules(to_u32(token.written())), table,
                      diag),
          Provenance::kCharTrans};
}

std::string capitalize_from(std::string_view text, std::size_t skip) {
  std::u32string u = to_u32(text);
  for (std::size_t i = skip; i < u.size(); ++i) {
    if (is_cased_letter(u[i])) {
      u[i] = to_upper(u[i]);
      return nfc(to_utf8(u));
    }
  }
  return std::string(text);
}

std::vector<RomanToken> capitalize_entry_initial(std::vector<RomanToken> tokens) {
  for (RomanToken& token : tokens) {
    if (!has_letter(token.text)) continue;
    const std::u32string u = to_u32(token.text);
    std::size_t skip = 0;
    while (true) {
      const std::size_t hyphen = u.find(U'-', skip);
      if (hyphen == std::u32string::npos ||
          !is_clitic_segment(std::u32string_view(u).substr(skip, hyphen - skip))) {
        break;
      }
      skip = hyphen + 1;
    }
    token.text = capitalize_from(token.text, skip);
    break;
  }
  return tokens;
}

std::vector<RomanToken> romanize_entry_char(const Entry& entry,
                                            const RuleTable& table,
                                            Diagnostics* diag) {
  std::vector<RomanToken> out;
  out.reserve(entry.tokens.size());
  for (const ArabicToken& token : entry.tokens) {
    out.push_back(chartrans_word(token, table, diag));
  }
  return capitalize_entry_initial(std::move(out));
}

}  // namespace alalc
