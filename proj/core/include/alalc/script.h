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
#ifndef ALALC_SCRIPT_H_
#define ALALC_SCRIPT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace alalc {

// Set of codepoints treated as punctuation by tokenization and by the CPI
// metric. The default is Unicode general category P* plus the Arabic marks
// ؟ ، ؛ « ».
class PunctuationSet {
 public:
  static PunctuationSet Default();
  static PunctuationSet Empty();
  // Exactly the codepoints of `chars` (UTF-8).
  static PunctuationSet Of(std::string_view chars);

  bool contains(char32_t c) const;
  // True when every codepoint of a non-empty string is punctuation.
  bool all_of(std::string_view utf8) const;
  std::string remove_from(std::string_view utf8) const;

 private:
  bool general_category_ = false;
  std::unordered_set<char32_t> extra_;
};

enum class TokenKind { kWord, kNumber, kPunctuation, kOther };
std::string_view to_string(TokenKind kind);

struct ArabicToken {
  std::string surface;
  TokenKind kind = TokenKind::kWord;
  std::optional<std::string> diacritized;

  // The token as it was written in the source line.
  const std::string& written() const {
    return diacritized ? *diacritized : surface;
  }

  bool operator==(const ArabicToken&) const = default;
};

enum class Provenance { kCharTrans, kMorphTrans, kMle, kExternal, kGapFill };
std::string_view to_string(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view name);

struct RomanToken {
  std::string text;
  Provenance provenance = Provenance::kExternal;

  bool operator==(const RomanToken&) const = default;
};

// Whitespace around and between tokens: gaps[0] precedes token 0, gaps[i]
// sits between tokens i-1 and i and gaps.back() trails the last token. An
// empty gap means the two tokens were attached in the source.
struct Layout {
  std::vector<std::string> gaps{std::string()};

  std::size_t slots() const { return gaps.size() - 1; }
  bool operator==(const Layout&) const = default;
};

// Whitespace split followed by detaching leading and trailing punctuation
// runs. Each detached run is one token.
struct SplitLine {
  std::vector<std::string> surfaces;
  Layout layout;
};
SplitLine split_line(std::string_view line,
                     const PunctuationSet& punct = PunctuationSet::Default());

TokenKind classify(std::string_view surface,
                   const PunctuationSet& punct = PunctuationSet::Default());

std::vector<ArabicToken> tokenize(std::string_view line);
std::vector<ArabicToken> tokenize(std::string_view line, Layout& layout,
                                  const PunctuationSet& punct =
                                      PunctuationSet::Default());
std::vector<RomanToken> tokenize_roman(std::string_view line, Provenance p,
                                       Layout* layout = nullptr);

std::string detokenize(std::span<const RomanToken> tokens,
                       const Layout& layout);
std::string strip_diacritics(std::string_view arabic);

// Script conversion for punctuation and number tokens: Arabic punctuation
// becomes its Latin counterpart, Arabic-Indic digits become ASCII digits,
// everything else is unchanged.
std::string romanize_neutral(std::string_view surface);

// Stable per-entry identifier: "<record_id>.<ordinal>", ordinal 1-based.
struct Entry {
  std::string id;
  std::string record_id;
  std::string tag;
  std::string arabic_line;
  std::vector<ArabicToken> tokens;
  Layout layout;
  std::optional<std::string> roman_line;
  std::optional<std::vector<RomanToken>> romanized;
};

// Tokenizes both sides. Reference tokens carry Provenance::kExternal.
Entry make_entry(std::string id, std::string record_id, std::string tag,
                 std::string_view arabic_line,
                 std::optional<std::string_view> roman_line = std::nullopt);

struct BibRecord {
  std::string record_id;
  std::string language_code;
  std::string source;
  std::vector<Entry> entries;
};

// Counted Roman-side words: tokens containing a letter.
std::size_t count_words(std::span<const RomanToken> tokens);

}  // namespace alalc

#endif  // ALALC_SCRIPT_H_
