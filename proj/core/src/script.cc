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
#include "alalc/script.h"

#include <algorithm>

#include "alalc/error.h"
#include "alalc/unicode.h"

namespace alalc {

PunctuationSet PunctuationSet::Default() {
  PunctuationSet set;
  set.general_category_ = true;
  for (char32_t c : std::u32string_view(U"؟،؛«»")) {
    set.extra_.insert(c);
  }
  return set;
}

PunctuationSet PunctuationSet::Empty() { return PunctuationSet(); }

PunctuationSet PunctuationSet::Of(std::string_view chars) {
  PunctuationSet set;
  for (char32_t c : to_u32(chars)) set.extra_.insert(c);
  return set;
}

bool PunctuationSet::contains(char32_t c) const {
  if (extra_.contains(c)) return true;
  return general_category_ && is_general_punctuation(c);
}

bool PunctuationSet::all_of(std::string_view utf8) const {
  const std::u32string text = to_u32(utf8);
  return !text.empty() && std::all_of(text.begin(), text.end(),
                                      [&](char32_t c) { return contains(c); });
}

std::string PunctuationSet::remove_from(std::string_view utf8) const {
  std::u32string text = to_u32(utf8);
  std::erase_if(text, [&](char32_t c) { return contains(c); });
  return to_utf8(text);
}

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kNumber: return "number";
    case TokenKind::kPunctuation: return "punctuation";
    case TokenKind::kOther: return "other";
  }
  return "?";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kCharTrans: return "chartrans";
    case Provenance::kMorphTrans: return "morphtrans";
    case Provenance::kMle: return "mle";
    case Provenance::kExternal: return "external";
    case Provenance::kGapFill: return "gapfill";
  }
  return "?";
}

std::optional<Provenance> parse_provenance(std::string_view name) {
  for (Provenance p : {Provenance::kCharTrans, Provenance::kMorphTrans,
                       Provenance::kMle, Provenance::kExternal,
                       Provenance::kGapFill}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

SplitLine split_line(std::string_view line, const PunctuationSet& punct) {
  SplitLine out;
  const std::u32string text = to_u32(line);
  std::size_t i = 0;
  std::u32string gap;
  auto push = [&](std::u32string_view token) {
    out.layout.gaps.back() = to_utf8(gap);
    gap.clear();
    out.surfaces.push_back(to_utf8(token));
    out.layout.gaps.emplace_back();
  };
  while (i < text.size()) {
    if (is_whitespace(text[i])) {
      gap.push_back(text[i++]);
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !is_whitespace(text[end])) ++end;
    const std::u32string_view chunk(text.data() + i, end - i);
    std::size_t lead = 0;
    while (lead < chunk.size() && punct.contains(chunk[lead])) ++lead;
    if (lead == chunk.size()) {
      push(chunk);
    } else {
      std::size_t trail = chunk.size();
      while (trail > lead && punct.contains(chunk[trail - 1])) --trail;
      if (lead > 0) push(chunk.substr(0, lead));
      push(chunk.substr(lead, trail - lead));
      if (trail < chunk.size()) push(chunk.substr(trail));
    }
    i = end;
  }
  out.layout.gaps.back() = to_utf8(gap);
  return out;
}

TokenKind classify(std::string_view surface, const PunctuationSet& punct) {
  if (punct.all_of(surface)) return TokenKind::kPunctuation;
  bool digit = false;
  bool letter = false;
  for (char32_t c : to_u32(surface)) {
    if (is_arabic_letter(c)) return TokenKind::kWord;
    digit = digit || is_decimal_digit(c);
    letter = letter || is_letter(c);
  }
  return digit && !letter ? TokenKind::kNumber : TokenKind::kOther;
}

std::vector<ArabicToken> tokenize(std::string_view line) {
  Layout layout;
  return tokenize(line, layout);
}

std::vector<ArabicToken> tokenize(std::string_view line, Layout& layout,
                                  const PunctuationSet& punct) {
  SplitLine split = split_line(line, punct);
  layout = std::move(split.layout);
  std::vector<ArabicToken> tokens;
  tokens.reserve(split.surfaces.size());
  for (std::string& written : split.surfaces) {
    ArabicToken token;
    token.kind = classify(written, punct);
    std::string bare = strip_diacritics(written);
    if (bare != written && !bare.empty()) {
      token.surface = std::move(bare);
      token.diacritized = std::move(written);
    } else {
      token.surface = std::move(written);
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<RomanToken> tokenize_roman(std::string_view line, Provenance p,
                                       Layout* layout) {
  SplitLine split = split_line(line);
  std::vector<RomanToken> tokens;
  tokens.reserve(split.surfaces.size());
  for (std::string& s : split.surfaces) tokens.push_back({std::move(s), p});
  if (layout != nullptr) *layout = std::move(split.layout);
  return tokens;
}

std::string detokenize(std::span<const RomanToken> tokens,
                       const Layout& layout) {
  if (tokens.size() != layout.slots()) {
    throw StructuralError("detokenize: " + std::to_string(tokens.size()) +
                          " tokens for " + std::to_string(layout.slots()) +
                          " layout slots");
  }
  std::string out = layout.gaps.front();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out += tokens[i].text;
    out += layout.gaps[i + 1];
  }
  return out;
}

std::string strip_diacritics(std::string_view arabic) {
  std::u32string text = to_u32(arabic);
  std::erase_if(text, is_arabic_diacritic);
  return to_utf8(text);
}

std::string romanize_neutral(std::string_view surface) {
  std::u32string out;
  for (char32_t c : to_u32(surface)) {
    if (c >= 0x0660 && c <= 0x0669) {
      out.push_back(U'0' + (c - 0x0660));
    } else if (c >= 0x06F0 && c <= 0x06F9) {
      out.push_back(U'0' + (c - 0x06F0));
    } else {
      switch (c) {
        case U'،': out.push_back(U','); break;
        case U'؛': out.push_back(U';'); break;
        case U'؟': out.push_back(U'?'); break;
        case U'٪': out.push_back(U'%'); break;
        case U'٫': out.push_back(U'.'); break;
        case U'٬': out.push_back(U','); break;
        case U'۔': out.push_back(U'.'); break;
        case U'ـ': break;  // tatweel
        default: out.push_back(c);
      }
    }
  }
  return to_utf8(out);
}

Entry make_entry(std::string id, std::string record_id, std::string tag,
                 std::string_view arabic_line,
                 std::optional<std::string_view> roman_line) {
  Entry entry;
  entry.id = std::move(id);
  entry.record_id = std::move(record_id);
  entry.tag = std::move(tag);
  entry.arabic_line = std::string(arabic_line);
  entry.tokens = tokenize(entry.arabic_line, entry.layout);
  if (roman_line) {
    entry.roman_line = std::string(*roman_line);
    entry.romanized = tokenize_roman(*roman_line, Provenance::kExternal);
  }
  return entry;
}

std::size_t count_words(std::span<const RomanToken> tokens) {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(), [](const RomanToken& t) {
        const std::u32string text = to_u32(t.text);
        return std::any_of(text.begin(), text.end(), is_letter);
      }));
}

}  // namespace alalc
