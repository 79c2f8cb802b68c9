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
#include "alalc/rule_table.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "alalc/error.h"
#include "alalc/script.h"
#include "alalc/unicode.h"

namespace alalc {
namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

int hex_value(char32_t c) {
  if (c >= U'0' && c <= U'9') return static_cast<int>(c - U'0');
  if (c >= U'a' && c <= U'f') return static_cast<int>(c - U'a' + 10);
  if (c >= U'A' && c <= U'F') return static_cast<int>(c - U'A' + 10);
  return -1;
}

// Recursive-descent parser over one pattern.
class PatternParser {
 public:
  PatternParser(std::u32string text,
                const std::map<std::string, std::u32string>& classes,
                const std::string& source, std::size_t line)
      : text_(std::move(text)), classes_(classes), source_(source), line_(line) {}

  void parse(Rule& rule) {
    if (peek(U'^')) {
      ++pos_;
      rule.before.kind = RuleContext::Kind::kBoundary;
    } else if (starts_with(U"(?<=") || starts_with(U"(?<!")) {
      rule.before.kind = text_[pos_ + 3] == U'='
                             ? RuleContext::Kind::kPositive
                             : RuleContext::Kind::kNegative;
      pos_ += 4;
      rule.before.spec = parse_spec();
      expect(U')');
    }
    while (pos_ < text_.size() && !at_suffix()) {
      CharSpec spec = parse_spec();
      if (peek(U'?')) {
        ++pos_;
        spec.optional = true;
      }
      rule.body.push_back(std::move(spec));
    }
    if (pos_ < text_.size()) {
      if (peek(U'$')) {
        ++pos_;
        rule.after.kind = RuleContext::Kind::kBoundary;
      } else {
        rule.after.kind = text_[pos_ + 2] == U'='
                              ? RuleContext::Kind::kPositive
                              : RuleContext::Kind::kNegative;
        pos_ += 3;
        rule.after.spec = parse_spec();
        expect(U')');
      }
    }
    if (pos_ != text_.size()) fail("trailing characters after context");
    if (rule.body.empty()) fail("empty rule body");
    if (std::all_of(rule.body.begin(), rule.body.end(),
                    [](const CharSpec& s) { return s.optional; })) {
      fail("rule body must consume at least one character");
    }
  }

  std::u32string parse_class_definition() {
    if (!peek(U'[')) fail("class definition must be a bracket expression");
    CharSpec spec = parse_spec();
    if (spec.kind != CharSpec::Kind::kSet) {
      fail("class definition must not be negated");
    }
    if (pos_ != text_.size()) fail("trailing characters after class");
    return spec.chars;
  }

 private:
  bool peek(char32_t c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool starts_with(std::u32string_view s) const {
    return std::u32string_view(text_).substr(pos_, s.size()) == s;
  }
  bool at_suffix() const {
    if (peek(U'$') && pos_ + 1 == text_.size()) return true;
    return starts_with(U"(?=") || starts_with(U"(?!");
  }
  void expect(char32_t c) {
    if (!peek(c)) fail("expected '" + to_utf8(c) + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(source_, line_, what + " in pattern '" + to_utf8(text_) + "'");
  }

  char32_t parse_escape() {
    // At the character after the backslash.
    if (pos_ >= text_.size()) fail("dangling backslash");
    if (text_[pos_] == U'u') {
      if (pos_ + 5 > text_.size()) fail("short \\u escape");
      char32_t value = 0;
      for (std::size_t k = 1; k <= 4; ++k) {
        const int h = hex_value(text_[pos_ + k]);
        if (h < 0) fail("bad \\u escape");
        value = value * 16 + static_cast<char32_t>(h);
      }
      pos_ += 5;
      return value;
    }
    return text_[pos_++];
  }

  const std::u32string& lookup_class() {
    // At the character after '{'.
    const std::size_t close = text_.find(U'}', pos_);
    if (close == std::u32string_view::npos) fail("unterminated class name");
    const std::string name = to_utf8(text_.substr(pos_, close - pos_));
    pos_ = close + 1;
    auto it = classes_.find(name);
    if (it == classes_.end()) fail("unknown class {" + name + "}");
    return it->second;
  }

  CharSpec parse_spec() {
    if (pos_ >= text_.size()) fail("unexpected end of pattern");
    CharSpec spec;
    const char32_t c = text_[pos_++];
    if (c == U'.') {
      spec.kind = CharSpec::Kind::kAny;
      return spec;
    }
    if (c == U'{') {
      spec.kind = CharSpec::Kind::kSet;
      spec.chars = lookup_class();
      return spec;
    }
    if (c == U'\\') {
      spec.chars.push_back(parse_escape());
      return spec;
    }
    if (c != U'[') {
      spec.chars.push_back(c);
      return spec;
    }
    spec.kind = CharSpec::Kind::kSet;
    if (peek(U'^')) {
      ++pos_;
      spec.kind = CharSpec::Kind::kNegatedSet;
    }
    std::set<char32_t> members;
    while (!peek(U']')) {
      if (pos_ >= text_.size()) fail("unterminated bracket expression");
      if (peek(U'{')) {
        ++pos_;
        const std::u32string& cls = lookup_class();
        members.insert(cls.begin(), cls.end());
        continue;
      }
      char32_t lo = text_[pos_++];
      if (lo == U'\\') lo = parse_escape();
      if (peek(U'-') && pos_ + 1 < text_.size() && text_[pos_ + 1] != U']') {
        ++pos_;
        char32_t hi = text_[pos_++];
        if (hi == U'\\') hi = parse_escape();
        if (hi < lo) fail("reversed range");
        for (char32_t x = lo; x <= hi; ++x) members.insert(x);
      } else {
        members.insert(lo);
      }
    }
    ++pos_;
    if (members.empty()) fail("empty bracket expression");
    spec.chars.assign(members.begin(), members.end());
    return spec;
  }

  std::u32string text_;
  const std::map<std::string, std::u32string>& classes_;
  const std::string& source_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

bool context_holds(const RuleContext& ctx, std::u32string_view text,
                   std::size_t index, bool at_edge) {
  switch (ctx.kind) {
    case RuleContext::Kind::kNone: return true;
    case RuleContext::Kind::kBoundary: return at_edge;
    case RuleContext::Kind::kPositive:
      return !at_edge && ctx.spec.matches(text[index]);
    case RuleContext::Kind::kNegative:
      return at_edge || !ctx.spec.matches(text[index]);
  }
  return false;
}

// Greedy with backtracking over optional specs; bodies are a few specs long.
bool match_body(const std::vector<CharSpec>& body, std::size_t k,
                std::u32string_view text, std::size_t pos,
                const RuleContext& after, std::size_t& end) {
  if (k == body.size()) {
    if (!context_holds(after, text, pos, pos >= text.size())) return false;
    end = pos;
    return true;
  }
  const CharSpec& spec = body[k];
  if (pos < text.size() && spec.matches(text[pos]) &&
      match_body(body, k + 1, text, pos + 1, after, end)) {
    return true;
  }
  return spec.optional && match_body(body, k + 1, text, pos, after, end);
}

}  // namespace

bool CharSpec::matches(char32_t c) const {
  switch (kind) {
    case Kind::kAny: return true;
    case Kind::kLiteral: return chars.front() == c;
    case Kind::kSet: return std::binary_search(chars.begin(), chars.end(), c);
    case Kind::kNegatedSet:
      return !std::binary_search(chars.begin(), chars.end(), c);
  }
  return false;
}

std::optional<std::size_t> Rule::match(std::u32string_view text,
                                       std::size_t pos) const {
  if (!context_holds(before, text, pos - (pos > 0 ? 1 : 0), pos == 0)) {
    return std::nullopt;
  }
  std::size_t end = 0;
  if (!match_body(body, 0, text, pos, after, end) || end == pos) {
    return std::nullopt;
  }
  return end - pos;
}

RuleTable RuleTable::Parse(std::string_view text, const std::string& source) {
  RuleTable table;
  std::map<std::string, std::u32string> classes;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string line = nfc(raw);
    const std::size_t first = line.find_first_not_of(" ");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string_view> fields = split_tabs(line);
    if (fields.size() > 2 && !fields.back().empty() &&
        fields.back().front() == '#') {
      fields.pop_back();
    }
    if (fields.front() == "@version") {
      if (fields.size() != 2) throw ParseError(source, line_no, "@version takes one value");
      table.version_ = std::string(fields[1]);
      continue;
    }
    if (fields.front() == "@class") {
      if (fields.size() != 3) throw ParseError(source, line_no, "@class takes NAME and [..]");
      PatternParser parser(to_u32(fields[2]), classes, source, line_no);
      classes[std::string(fields[1])] = parser.parse_class_definition();
      continue;
    }
    if (fields.front() == "@exception") {
      if (fields.size() != 3 || fields[1].empty() || fields[2].empty()) {
        throw ParseError(source, line_no, "@exception takes WORD and ROMANIZATION");
      }
      table.exceptions_[strip_diacritics(fields[1])] = std::string(fields[2]);
      continue;
    }
    if (fields.front().front() == '@') {
      throw ParseError(source, line_no,
                       "unknown directive " + std::string(fields.front()));
    }
    if (fields.size() != 2) {
      throw ParseError(source, line_no,
                       "expected PATTERN<TAB>REPLACEMENT, got " +
                           std::to_string(fields.size()) + " fields");
    }
    Rule rule;
    rule.pattern = std::string(fields[0]);
    rule.replacement = fields[1] == "\"\"" ? std::string() : std::string(fields[1]);
    rule.line = line_no;
    PatternParser(to_u32(fields[0]), classes, source, line_no).parse(rule);
    table.rules_.push_back(std::move(rule));
  }
  table.build_index();

  std::string missing;
  for (char32_t c : alalc_coverage_set()) {
    if (!table.by_first_char_.contains(c)) {
      missing += (missing.empty() ? "" : ", ") + codepoint_name(c) + " (" +
                 to_utf8(c) + ")";
    }
  }
  if (!missing.empty()) {
    throw ValidationError(source + ": no rule covers " + missing);
  }
  return table;
}

void RuleTable::build_index() {
  std::map<char32_t, std::vector<std::size_t>> explicit_rules;
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    bool wildcard = false;
    for (const CharSpec& spec : rules_[r].body) {
      if (spec.kind == CharSpec::Kind::kAny ||
          spec.kind == CharSpec::Kind::kNegatedSet) {
        wildcard = true;
      } else {
        for (char32_t c : spec.chars) explicit_rules[c].push_back(r);
      }
      if (!spec.optional) break;
    }
    if (wildcard) wildcard_.push_back(r);
  }
  for (auto& [c, list] : explicit_rules) {
    std::vector<std::size_t> merged;
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::merge(list.begin(), list.end(), wildcard_.begin(), wildcard_.end(),
               std::back_inserter(merged));
    by_first_char_[c] = std::move(merged);
  }
}

std::optional<RuleTable::Match> RuleTable::match_at(std::u32string_view text,
                                                    std::size_t pos) const {
  auto it = by_first_char_.find(text[pos]);
  const std::vector<std::size_t>& candidates =
      it == by_first_char_.end() ? wildcard_ : it->second;
  for (std::size_t r : candidates) {
    if (auto length = rules_[r].match(text, pos)) {
      return Match{&rules_[r], *length};
    }
  }
  return std::nullopt;
}

const std::string* RuleTable::exception(std::string_view bare) const {
  auto it = exceptions_.find(std::string(bare));
  return it == exceptions_.end() ? nullptr : &it->second;
}

RuleTable load_rule_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rule table " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return RuleTable::Parse(buf.str(), path.string());
}

const std::u32string& alalc_coverage_set() {
  static const std::u32string kCoverage =
      U"ءآأؤإئابةتثجحخدذرزسشصضطظعغفقكلمنهوىي"
      U"\u064B\u064C\u064D\u064E\u064F\u0650\u0651\u0652\u0670";
  return kCoverage;
}

}  // namespace alalc
