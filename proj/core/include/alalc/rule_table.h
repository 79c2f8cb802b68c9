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
#ifndef ALALC_RULE_TABLE_H_
#define ALALC_RULE_TABLE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace alalc {

// One position of a rule pattern: a literal, a bracket class, a negated
// bracket class, or '.'.
struct CharSpec {
  enum class Kind { kLiteral, kSet, kNegatedSet, kAny };

  Kind kind = Kind::kLiteral;
  std::u32string chars;  // sorted; a single codepoint for kLiteral
  bool optional = false;

  bool matches(char32_t c) const;
};

// Zero-width context on one side of the rule body.
struct RuleContext {
  enum class Kind { kNone, kBoundary, kPositive, kNegative };

  Kind kind = Kind::kNone;
  CharSpec spec;
};

// Rule file grammar, one rule per line (TAB separated):
//
//   [^ | (?<=X) | (?<!X)] BODY [$ | (?=X) | (?!X)] <TAB> REPLACEMENT
//
// BODY is one or more specs, each optionally followed by '?'. A spec is a
// literal, \uXXXX, \-escaped character, '.', [..], [^..] or {NAME}.
// Brackets accept ranges (a-b) and {NAME}. The replacement "" means empty.
// Directives: @version, @class NAME [..], @exception WORD ROMANIZATION.
// Lines starting with '#' are comments.
struct Rule {
  std::string pattern;
  std::string replacement;
  RuleContext before;
  std::vector<CharSpec> body;
  RuleContext after;
  std::size_t line = 0;

  // Length of the match at `pos`, or nullopt.
  std::optional<std::size_t> match(std::u32string_view text,
                                   std::size_t pos) const;
};

class RuleTable {
 public:
  struct Match {
    const Rule* rule;
    std::size_t length;
  };

  // Parses and validates. Throws ParseError for malformed lines and
  // ValidationError when an ALA-LC letter or mark has no rule.
  static RuleTable Parse(std::string_view text,
                         const std::string& source = "<memory>");

  const std::vector<Rule>& rules() const { return rules_; }
  const std::map<std::string, std::string>& exceptions() const {
    return exceptions_;
  }
  const std::string& version() const { return version_; }

  // First rule (in table order) matching at `pos`.
  std::optional<Match> match_at(std::u32string_view text,
                                std::size_t pos) const;
  // Exception lookup by undiacritized surface.
  const std::string* exception(std::string_view bare) const;

 private:
  void build_index();

  std::vector<Rule> rules_;
  std::map<std::string, std::string> exceptions_;
  std::string version_;
  std::unordered_map<char32_t, std::vector<std::size_t>> by_first_char_;
  std::vector<std::size_t> wildcard_;
};

RuleTable load_rule_table(const std::filesystem::path& path);

// Arabic letters and marks of the ALA-LC table. Every one must be the first
// character of at least one rule body.
const std::u32string& alalc_coverage_set();

}  // namespace alalc

#endif  // ALALC_RULE_TABLE_H_
