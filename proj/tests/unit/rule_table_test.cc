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
#include <sstream>
#include <string>

#include "alalc/error.h"
#include "alalc/rule_table.h"
#include "alalc/unicode.h"
#include "doctest.h"
#include "test_data.h"

namespace alalc {
namespace {

// Directive lines (@version, @class) are always kept.
std::string without_rules_containing(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    if (line.starts_with('@') || line.find(needle) == std::string::npos) out += line + '\n';
  }
  return out;
}

TEST_CASE("bundled table loads") {
  const RuleTable& table = testing::default_table();
  CHECK(table.rules().size() >= 104);
  CHECK(table.exceptions().size() >= 13);
  CHECK(table.version() == "alalc-arabic-2012.3");
  REQUIRE(table.exception("بن") != nullptr);
  CHECK(*table.exception("بن") == "ibn");
  CHECK(table.exception("كتاب") == nullptr);
}

TEST_CASE("every covered codepoint starts some rule") {
  const RuleTable& table = testing::default_table();
  for (char32_t c : alalc_coverage_set()) {
    const std::u32string probe(1, c);
    CHECK_MESSAGE(table.match_at(probe, 0).has_value(), codepoint_name(c));
  }
}

TEST_CASE("empty table fails coverage") {
  CHECK_THROWS_AS(RuleTable::Parse(""), ValidationError);
}

TEST_CASE("coverage error names the missing shadda") {
  const std::string text = testing::slurp(testing::data_path("rules/alalc_arabic.rules"));
  // The catch-all mark rule would also cover shadda.
  const std::string stripped =
      without_rules_containing(without_rules_containing(text, "\\u0651"), "{M}\t");
  try {
    RuleTable::Parse(stripped, "no-shadda.rules");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("U+0651") != std::string::npos);
  }
}

TEST_CASE("malformed lines report their line number") {
  const std::string base = "@version\tt\n# comment\n";
  try {
    RuleTable::Parse(base + "ب\tb\textra\n", "bad.rules");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("bad.rules:3") == 0);
  }
  CHECK_THROWS_AS(RuleTable::Parse("@frobnicate\tx\n"), ParseError);
  CHECK_THROWS_AS(RuleTable::Parse("@exception\tبن\n"), ParseError);
  CHECK_THROWS_AS(RuleTable::Parse("@class\tX\t[^ab]\n"), ParseError);
}

TEST_CASE("first matching rule wins") {
  std::string text = testing::slurp(testing::data_path("rules/alalc_arabic.rules"));
  // Prepend a rule that shadows the ordinary ب mapping.
  text = "ب\tXX\n" + text;
  const RuleTable table = RuleTable::Parse(text);
  const auto m = table.match_at(U"ب", 0);
  REQUIRE(m);
  CHECK(m->rule->replacement == "XX");
  CHECK(m->rule->line == 1);
}

TEST_CASE("context and class patterns") {
  const std::string text = testing::slurp(testing::data_path("rules/alalc_arabic.rules"));
  const RuleTable table = RuleTable::Parse("^ب$\tBOUNDED\n(?<=ت)ب\tAFTER_T\n" + text);
  CHECK(table.match_at(U"ب", 0)->rule->replacement == "BOUNDED");
  CHECK(table.match_at(U"تب", 1)->rule->replacement == "AFTER_T");
  CHECK(table.match_at(U"كب", 1)->rule->replacement != "AFTER_T");
}

TEST_CASE("missing file is an io error") {
  CHECK_THROWS_AS(load_rule_table("/nonexistent/table.rules"), IoError);
}

}  // namespace
}  // namespace alalc
