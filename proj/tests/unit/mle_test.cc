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
#include <map>
#include <random>
#include <string>
#include <vector>

#include "alalc/chartrans.h"
#include "alalc/error.h"
#include "alalc/mle.h"
#include "alalc/morphtrans.h"
#include "alalc/script.h"
#include "alalc/technique.h"
#include "doctest.h"
#include "test_data.h"

namespace alalc {
namespace {

Entry pair_entry(const std::string& arabic, const std::string& roman) {
  return make_entry("e", "r", "245", arabic, roman);
}

TEST_CASE("argmax over observed pairs") {
  std::vector<Entry> entries;
  for (int i = 0; i < 3; ++i) entries.push_back(pair_entry("كتاب", "kitāb"));
  entries.push_back(pair_entry("كتاب", "kutub"));
  entries.push_back(pair_entry("قبر", "Qabr"));
  const MleModel model = train_mle(entries);
  REQUIRE(model.lookup("كتاب"));
  CHECK(*model.lookup("كتاب") == "kitāb");
  CHECK(*model.lookup("قبر") == "Qabr");
  CHECK(model.lookup("رسالة") == nullptr);
  CHECK(model.trained_words() == 5);
}

TEST_CASE("ties break lexicographically") {
  MleCounts counts;
  counts.add("x", "B", 2);
  counts.add("x", "A", 2);
  counts.add("x", "C", 1);
  const MleModel model(counts);
  CHECK(*model.lookup("x") == "A");
  const auto* list = model.candidates("x");
  REQUIRE(list);
  CHECK(*list == MleModel::Candidates{{"A", 2}, {"B", 2}, {"C", 1}});
}

TEST_CASE("punctuation and numbers bypass the table") {
  const MleModel model = train_mle(std::vector<Entry>{pair_entry("قبر.", "Qabr.")});
  const auto tokens = tokenize("قبر . ١٩٢٧ زمبرك");
  CHECK(lookup(model, tokens[0]) == std::optional<std::string>("Qabr"));
  CHECK(lookup(model, tokens[1]) == std::optional<std::string>("."));
  CHECK(lookup(model, tokens[2]) == std::optional<std::string>("1927"));
  CHECK_FALSE(lookup(model, tokens[3]));
}

TEST_CASE("mismatched entries are rejected with their id") {
  Entry bad = make_entry("rec.7", "rec", "245", "كتاب جديد", "Kitāb");
  MleCounts counts;
  try {
    counts.add_entry(bad);
    FAIL("expected validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("rec.7") != std::string::npos);
  }
  CHECK_THROWS_AS(counts.add_entry(make_entry("x", "r", "245", "كتاب")), ValidationError);
}

TEST_CASE("argmax matches a brute-force counter and sharded training") {
  std::mt19937_64 rng(2020);
  std::vector<double> weights;
  for (int k = 1; k <= 200; ++k) weights.push_back(1.0 / k);
  std::discrete_distribution<int> zipf(weights.begin(), weights.end());
  const std::vector<std::string> letters{"ب", "ت", "ك", "م", "ن", "ل"};
  std::vector<std::string> keys;
  for (int k = 0; k < 200; ++k) {
    keys.push_back(letters[k % 6] + letters[(k / 6) % 6] + letters[(k / 36) % 6]);
  }
  const std::vector<std::string> romans{"a", "b", "c", "d"};

  std::vector<Entry> entries;
  std::map<std::string, std::map<std::string, int>> brute;
  for (int i = 0; i < 1000; ++i) {
    const std::string& key = keys[zipf(rng)];
    const std::string& roman = romans[rng() % romans.size()];
    entries.push_back(pair_entry(key, roman));
    ++brute[key][roman];
  }
  const MleModel model = train_mle(entries);
  CHECK(model.size() == brute.size());
  for (const auto& [key, counts] : brute) {
    std::string best;
    int best_count = 0;
    for (const auto& [roman, n] : counts) {  // ascending order: first max wins ties
      if (n > best_count) {
        best = roman;
        best_count = n;
      }
    }
    REQUIRE(model.lookup(key));
    CHECK(*model.lookup(key) == best);
  }

  for (std::size_t shards : {2u, 3u, 7u}) {
    std::vector<MleCounts> parts(shards);
    for (std::size_t i = 0; i < entries.size(); ++i) parts[i % shards].add_entry(entries[i]);
    MleCounts merged;
    for (std::size_t s = shards; s-- > 0;) merged.merge(parts[s]);
    CHECK(MleModel(merged).Serialize() == model.Serialize());
  }
}

TEST_CASE("merging different fractions is refused") {
  MleCounts a(2);
  MleCounts b(4);
  CHECK_THROWS_AS(a.merge(b), ValidationError);
}

TEST_CASE("model file round-trips") {
  std::vector<Entry> entries{pair_entry("كتاب جديد", "Kitāb jadīd"),
                             pair_entry("كتاب", "kitāb"), pair_entry("كتاب", "kitāb")};
  const MleModel model = train_mle(entries, 8);
  const std::string text = model.Serialize();
  CHECK(text.starts_with("# alalc-mle-model v1\n# trained_words 4\n# source_fraction 1/8\n"));
  const MleModel back = MleModel::Parse(text);
  CHECK(back == model);
  CHECK(back.fraction_denominator() == 8);

  testing::TempDir dir("mle");
  model.Save(dir / "m.tsv");
  CHECK(MleModel::Load(dir / "m.tsv") == model);
}

TEST_CASE("malformed model lines") {
  CHECK_THROWS_AS(MleModel::Parse("# alalc-mle-model v1\nكتاب\tkitāb\n"), ParseError);
  CHECK_THROWS_AS(MleModel::Parse("# alalc-mle-model v1\nكتاب\tkitāb\tx\n"), ParseError);
  CHECK_THROWS_AS(MleModel::Parse("كتاب\tkitāb\t1\n"), ParseError);
}

TEST_CASE("backoff chains") {
  const RuleTable& table = testing::default_table();
  const MleModel model = train_mle(std::vector<Entry>{pair_entry("كتاب", "kitāb")});
  NaiveAnalyzer analyzer;
  analyzer.add_word("رِسَالَة");
  const MleTechnique mle(model);
  const MorphTransTechnique morph(analyzer, table);
  const CharTransTechnique chartrans(table);

  const Entry entry = make_entry("e", "r", "245", "كتاب رسالة زمبرك .");
  const std::array<const Technique*, 2> simple{&mle, &chartrans};
  const auto a = romanize_entry_backoff(entry, simple);
  CHECK(a[0].provenance == Provenance::kMle);
  CHECK(a[0].text == "Kitāb");
  CHECK(a[1].provenance == Provenance::kCharTrans);

  const std::array<const Technique*, 3> full{&mle, &morph, &chartrans};
  const auto b = romanize_entry_backoff(entry, full);
  CHECK(b.size() == entry.tokens.size());
  CHECK(b[1].provenance == Provenance::kMorphTrans);
  CHECK(b[1].text == "risālah");
  CHECK(b[2].provenance == Provenance::kCharTrans);
  CHECK(b[3].text == ".");

  BackoffOptions no_caps;
  no_caps.entry_initial_caps = false;
  CHECK(romanize_entry_backoff(entry, simple, no_caps)[0].text == "kitāb");

  const std::array<const Technique*, 1> only_mle{&mle};
  CHECK_THROWS_AS(romanize_entry_backoff(entry, only_mle), ValidationError);
  CHECK_THROWS_AS(romanize_entry_backoff(entry, std::span<const Technique* const>{}),
                  ValidationError);
}

}  // namespace
}  // namespace alalc
