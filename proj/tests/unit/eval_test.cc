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
#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "alalc/error.h"
#include "alalc/eval.h"
#include "alalc/script.h"
#include "doctest.h"
#include "test_data.h"

namespace alalc {
namespace {

std::vector<RomanToken> roman(const std::vector<std::string>& texts) {
  std::vector<RomanToken> out;
  for (const std::string& t : texts) out.push_back({t, Provenance::kMle});
  return out;
}

TEST_CASE("match levels") {
  const Matcher m;
  CHECK(m.compare("al-Qāhirah", "al-Qāhirah") == MatchOutcome{true, true, true});
  CHECK(m.compare("al-qāhirah", "al-Qāhirah") == MatchOutcome{false, true, true});
  CHECK(m.compare("al-Qāhirah,", "al-qāhirah.") == MatchOutcome{false, false, true});
  CHECK(m.compare("al-Rayf", "al-rīf") == MatchOutcome{});
  CHECK(m.compare("Khassārah,", "Khasārah.") == MatchOutcome{});
  CHECK(m.compare("Nadawāt", "Nadwāt") == MatchOutcome{});
  CHECK(m.compare(",", ".") == MatchOutcome{false, false, true});
  // NFD input compares equal to NFC.
  CHECK(m.compare("ā", "ā").exact);
  // Full case folding, not just ASCII.
  CHECK(m.compare("ḤASAN", "ḥasan").ci);
}

TEST_CASE("CPI with an empty punctuation set is CI") {
  const Matcher empty(PunctuationSet::Empty());
  CHECK(empty.compare("al-Qāhirah,", "al-qāhirah.") == MatchOutcome{false, false, false});
  CHECK(empty.compare("Qabr", "qabr") == MatchOutcome{false, true, true});
}

TEST_CASE("error example outcomes") {
  std::ifstream in(testing::data_path("fixtures/error_examples.tsv"));
  std::string line;
  std::size_t rows = 0;
  const Matcher m;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) f.push_back(field);
    REQUIRE(f.size() == 9);
    const MatchOutcome got = m.compare(f[3], f[4]);
    const MatchOutcome expected{f[5] == "1", f[6] == "1", f[7] == "1"};
    CHECK_MESSAGE(got == expected, f[3]);
    const auto side = parse_error_side(f[0]);
    const auto kind = parse_error_kind(f[1]);
    REQUIRE(side);
    REQUIRE(kind);
    CHECK(is_permitted(*side, *kind));
    if (f[8] != "-") CHECK(to_string(suggest_label(f[2], f[3], f[4])) == f[8]);
    ++rows;
  }
  CHECK(rows == 11);
}

TEST_CASE("error categories per side") {
  CHECK(is_permitted(ErrorSide::kGold, ErrorKind::kAlignment));
  CHECK(is_permitted(ErrorSide::kSystem, ErrorKind::kRomanization));
  CHECK_FALSE(is_permitted(ErrorSide::kGold, ErrorKind::kHallucination));
  CHECK_FALSE(is_permitted(ErrorSide::kSystem, ErrorKind::kTranslation));
  CHECK_THROWS_AS(make_category(ErrorSide::kSystem, ErrorKind::kSource), ValidationError);
  CHECK(make_category(ErrorSide::kSystem, ErrorKind::kValidVariant).kind ==
        ErrorKind::kValidVariant);
  CHECK_FALSE(parse_error_kind("typo"));
  CHECK(parse_error_kind("valid_variant") == ErrorKind::kValidVariant);
}

TEST_CASE("suggested labels") {
  CHECK(suggest_label("إبراهيم", "Ibrāhīm", "Ibrāhim") == SuggestedLabel::kRomanization);
  CHECK(suggest_label("الادارية.", "Taṣal-Idārīyah.", "al-Idārīyah.") ==
        SuggestedLabel::kHallucination);
  CHECK(suggest_label("السيد", "al-syd", "al-Sayyid") == SuggestedLabel::kRomanization);
  CHECK(suggest_label("شعر.", "shiʻr.", "Poems.") == SuggestedLabel::kOther);
}

TEST_CASE("word_accuracy") {
  const auto ref = roman({"Qabr", "/", "Maḥmūd", "Taymūr", "."});
  CHECK(word_accuracy(ref, ref).all == Tally{5, 5, 5, 5});
  const auto pred = roman({"qabr", "/", "Maḥmūd", "Taymur", ","});
  const EvalReport r = word_accuracy(pred, ref);
  CHECK(r.all == Tally{5, 2, 3, 4});
  CHECK(r.words == Tally{3, 1, 2, 2});
  CHECK(r.per_provenance.at(Provenance::kMle).total == 5);
  try {
    word_accuracy(roman({"a"}), ref, Matcher(), "rec.3");
    FAIL("expected structural error");
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("rec.3") != std::string::npos);
  }
}

TEST_CASE("percent formatting rounds half up") {
  CHECK(format_percent(0, 0) == "0.0");
  CHECK(format_percent(1, 3) == "33.3");
  CHECK(format_percent(2, 3) == "66.7");
  CHECK(format_percent(1, 2000) == "0.1");
  CHECK(format_percent(1, 2001) == "0.0");
  CHECK(format_percent(7, 7) == "100.0");
  CHECK(format_percent(840, 1000) == "84.0");
}

TEST_CASE("exact <= ci <= cpi and order independence") {
  std::mt19937_64 rng(123);
  const std::vector<std::string> vocab{"Kitāb", "kitāb", "kitāb.", "KITĀB", "al-naḥw",
                                       "al-Naḥw,", ",", ".", "", "ʻIlm",  "ʻilm"};
  std::vector<Entry> refs;
  std::map<std::string, std::vector<RomanToken>> preds;
  for (int e = 0; e < 500; ++e) {
    Entry entry;
    entry.id = "e" + std::to_string(e);
    std::vector<RomanToken> ref(1 + rng() % 6);
    std::vector<RomanToken> pred(ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      ref[i].text = vocab[rng() % (vocab.size() - 1)];
      pred[i].text = vocab[rng() % vocab.size()];
    }
    entry.romanized = ref;
    entry.tokens.resize(ref.size());
    refs.push_back(entry);
    preds[entry.id] = pred;
    const Tally t = word_accuracy(pred, ref).all;
    CHECK(t.exact <= t.ci);
    CHECK(t.ci <= t.cpi);
    const Tally none = word_accuracy(pred, ref, Matcher(PunctuationSet::Empty())).all;
    CHECK(none.cpi == none.ci);
  }
  const EvalReport a = evaluate(refs, preds);
  std::shuffle(refs.begin(), refs.end(), rng);
  const EvalReport b = evaluate(refs, preds);
  CHECK(a.all == b.all);
  CHECK(a.words == b.words);
  CHECK(a.format_kv() == b.format_kv());
}

TEST_CASE("missing and misaligned predictions") {
  std::vector<Entry> refs{make_entry("a", "r", "245", "قبر / محمود", "Qabr / Maḥmūd"),
                          make_entry("b", "r", "245", "قبر", "Qabr")};
  std::map<std::string, std::vector<RomanToken>> preds{{"a", roman({"Qabr", "Maḥmūd"})}};
  CHECK_THROWS_AS(evaluate(refs, preds), StructuralError);

  EvalOptions lenient;
  lenient.lenient = true;
  const EvalReport r = evaluate(refs, preds, Matcher(), lenient);
  CHECK(r.entries == 2);
  CHECK(r.missing_entries == 1);
  CHECK(r.aligned_entries == 1);
  CHECK(r.all.total == 4);
  CHECK(r.all.exact == 2);
  CHECK(r.words.exact == 2);
}

TEST_CASE("report formats") {
  const auto ref = roman({"Qabr", "."});
  const EvalReport r = word_accuracy(roman({"qabr", "."}), ref);
  const std::string kv = r.format_kv();
  CHECK(kv.find("all.exact_pct=50.0\n") != std::string::npos);
  CHECK(kv.find("all.ci_pct=100.0\n") != std::string::npos);
  CHECK(kv.find("words.total=1\n") != std::string::npos);
  const std::string table = r.format_table("Dev");
  CHECK(table.starts_with("Dev\n"));
  CHECK(table.find("Exact") != std::string::npos);
}

TEST_CASE("sample_errors") {
  std::vector<Entry> refs;
  std::map<std::string, std::vector<RomanToken>> preds;
  for (int i = 0; i < 40; ++i) {
    const std::string id = "e" + std::to_string(i);
    refs.push_back(make_entry(id, "r", "245", "إبراهيم قبر", "Ibrāhim Qabr"));
    preds[id] = roman({"Ibrāhīm", i % 2 == 0 ? "Qabr" : "qabr,"});
  }
  const auto sample = sample_errors(refs, preds, 10, 3);
  CHECK(sample.size() == 10);
  for (const auto& s : sample) {
    CHECK(s.token_index == 0);
    CHECK(s.suggestion == SuggestedLabel::kRomanization);
    CHECK(s.source == "إبراهيم");
  }
  CHECK(sample_errors(refs, preds, 10, 3).front().entry_id == sample.front().entry_id);
  CHECK(sample_errors(refs, preds, 100, 3).size() == 40);

  std::map<std::string, std::vector<RomanToken>> perfect;
  for (const Entry& e : refs) perfect[e.id] = *e.romanized;
  CHECK(sample_errors(refs, perfect, 10, 3).empty());
}

}  // namespace
}  // namespace alalc
