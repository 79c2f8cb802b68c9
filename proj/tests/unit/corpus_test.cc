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
#include <set>
#include <string>
#include <vector>

#include "alalc/corpus.h"
#include "alalc/error.h"
#include "alalc/marc.h"
#include "doctest.h"
#include "test_data.h"

namespace alalc {
namespace {

std::vector<BibRecord> numbered_records(std::size_t n, std::size_t entries_each = 1) {
  std::vector<BibRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    BibRecord r;
    r.record_id = "rec" + std::to_string(1000 + i);
    r.language_code = "ara";
    r.source = i % 3 == 0 ? "lc" : "umich";
    for (std::size_t k = 0; k < entries_each; ++k) {
      r.entries.push_back(make_entry(r.record_id + "." + std::to_string(k + 1), r.record_id,
                                     "245", "كتاب", "Kitāb"));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::set<std::string> ids(const std::vector<BibRecord>& records) {
  std::set<std::string> out;
  for (const auto& r : records) out.insert(r.record_id);
  return out;
}

std::vector<BibRecord> sample_arabic() {
  return select_language(parse_marc_file(testing::data_path("sample/marc_sample.xml")));
}

TEST_CASE("safe tag lists") {
  const SafeTagList def = SafeTagList::Default();
  CHECK(def.tags().size() == 27);
  CHECK(def.contains("245"));
  CHECK_FALSE(def.contains("008"));
  CHECK_FALSE(def.contains("500"));
  CHECK(SafeTagList::Load(testing::data_path("corpus/safe_tags.txt")).tags() == def.tags());
  CHECK(SafeTagList::Parse("245 260 # titles\n100\n").tags().size() == 3);
  CHECK_THROWS_AS(SafeTagList::Parse("24x\n"), ParseError);
  CHECK_THROWS_AS(SafeTagList::Parse("# nothing\n"), ValidationError);
  CHECK_THROWS_AS(SafeTagList(std::set<std::string>{"1000"}), ValidationError);
}

TEST_CASE("filter_entries keeps safe tags and drops emptied records") {
  std::vector<BibRecord> records(2);
  records[0].record_id = "a";
  records[0].entries = {make_entry("a.1", "a", "245", "قبر", "Qabr"),
                        make_entry("a.2", "a", "500", "ملاحظة", "Mulāḥaẓah")};
  records[1].record_id = "b";
  records[1].entries = {make_entry("b.1", "b", "008", "١٩٢٧", "1927")};
  FilterStats stats;
  const auto kept = filter_entries(records, SafeTagList::Default(), &stats);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].entries.size() == 1);
  CHECK(kept[0].entries[0].tag == "245");
  CHECK(stats.entries_in == 3);
  CHECK(stats.entries_kept == 1);
  CHECK(stats.records_kept == 1);
}

TEST_CASE("clean_entry examples") {
  CleanLog log;
  auto [ar, ro] = clean_entry("تاريخ و كتاب", "Tārīkh wa-kitāb", &log);
  CHECK(ar == "تاريخ وكتاب");
  CHECK(ro == "Tārīkh wa-kitāb");
  CHECK(log.conjunctions_merged == 1);

  CleanLog quiet;
  auto same = clean_entry("قبر / محمود تيمور.", "Qabr / Maḥmūd Taymūr.", &quiet);
  CHECK(same.first == "قبر / محمود تيمور.");
  CHECK(same.second == "Qabr / Maḥmūd Taymūr.");
  CHECK(quiet.total() == 0);

  // Roman side carrying an Arabic comma, detached.
  CleanLog punct;
  auto fixed = clean_entry("القاهرة، 1927", "al-Qāhirah ، 1927", &punct);
  CHECK(fixed.second == "al-Qāhirah, 1927");
  CHECK(tokenize(fixed.first).size() == tokenize_roman(fixed.second, Provenance::kExternal).size());
  CHECK(punct.punctuation_mapped == 1);
}

TEST_CASE("bidi damage moves leading punctuation") {
  CleanLog log;
  auto [ar, ro] = clean_entry(". قبر", "Qabr.", &log);
  CHECK(ar == "قبر.");
  CHECK(log.bidi_resyncs == 1);
}

TEST_CASE("cleaning is idempotent on the sample") {
  const auto records = sample_arabic();
  std::size_t changed = 0;
  for (const Entry& e : flatten_entries(records)) {
    auto once = clean_entry(e.arabic_line, *e.roman_line);
    CleanLog log;
    auto twice = clean_entry(once.first, once.second, &log);
    CHECK(twice == once);
    CHECK(log.total() == 0);
    changed += once.first != e.arabic_line || once.second != *e.roman_line;
  }
  CHECK(changed > 0);
}

TEST_CASE("drop_mismatched") {
  std::vector<Entry> entries{
      make_entry("a", "r", "245", "كتاب في النحو : جديد", "Kitāb fī al-naḥw : jadīd"),
      make_entry("b", "r", "245", "كتاب في النحو : جديد", "Kitāb fī al-naḥw jadīd"),
      make_entry("c", "r", "245", "", ""),
  };
  CHECK(entries[0].tokens.size() == 5);
  MismatchStats stats;
  const auto kept = drop_mismatched(entries, &stats);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].id == "a");
  CHECK(stats.dropped == 2);
  CHECK(stats.removal_rate() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("after cleaning and dropping every entry is aligned") {
  auto records = sample_arabic();
  records = filter_entries(records, SafeTagList::Default());
  clean_records(records);
  records = drop_mismatched(records);
  for (const Entry& e : flatten_entries(records)) {
    REQUIRE(e.romanized);
    CHECK(e.romanized->size() == e.tokens.size());
  }
}

TEST_CASE("split ratios") {
  const SplitSpec spec = SplitSpec::Parse("80/10/10");
  CHECK(split_counts(107439, spec) == std::array<std::size_t, 3>{85952, 10744, 10743});
  CHECK(split_counts(10, spec) == std::array<std::size_t, 3>{8, 1, 1});
  CHECK(split_counts(0, spec) == std::array<std::size_t, 3>{0, 0, 0});
  CHECK(split_counts(107439, SplitSpec::Parse("0.8/0.1/0.1")) ==
        std::array<std::size_t, 3>{85952, 10744, 10743});
  CHECK_THROWS_AS(SplitSpec::Parse("80/10"), ValidationError);
  CHECK_THROWS_AS(SplitSpec::Parse("80/0/20"), ValidationError);
  CHECK_THROWS_AS(SplitSpec::Parse("a/b/c"), ValidationError);
  SplitSpec bad;
  bad.train = {1, 2};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("split proportions stay within one record") {
  const SplitSpec spec = SplitSpec::Parse("80/10/10");
  for (std::size_t n = 0; n < 500; ++n) {
    const auto c = split_counts(n, spec);
    CHECK(c[0] + c[1] + c[2] == n);
    CHECK(std::abs(static_cast<double>(c[0]) - 0.8 * n) <= 1.0);
    CHECK(std::abs(static_cast<double>(c[1]) - 0.1 * n) <= 1.0);
    CHECK(std::abs(static_cast<double>(c[2]) - 0.1 * n) <= 1.0);
  }
}

TEST_CASE("split is a deterministic partition") {
  const auto records = numbered_records(203);
  const SplitSpec spec = SplitSpec::Parse("80/10/10", 42);
  const SplitResult a = split_records(records, spec);
  const SplitResult b = split_records(records, spec);
  CHECK(format_corpus(a.train) == format_corpus(b.train));
  CHECK(format_corpus(a.dev) == format_corpus(b.dev));
  CHECK(format_corpus(a.test) == format_corpus(b.test));

  std::set<std::string> all;
  for (const auto* part : {&a.train, &a.dev, &a.test}) {
    for (const auto& id : ids(*part)) CHECK(all.insert(id).second);
  }
  CHECK(all == ids(records));
  CHECK(a.train.size() == 163);

  // Input order must not matter.
  auto reversed = records;
  std::reverse(reversed.begin(), reversed.end());
  CHECK(format_corpus(split_records(reversed, spec).dev) == format_corpus(a.dev));

  const SplitResult other = split_records(records, SplitSpec::Parse("80/10/10", 43));
  CHECK(ids(other.dev) != ids(a.dev));
}

TEST_CASE("stratified split splits each source") {
  const auto records = numbered_records(90);
  SplitSpec spec = SplitSpec::Parse("80/10/10", 1);
  spec.stratify_by_source = true;
  const SplitResult s = split_records(records, spec);
  std::size_t lc_dev = 0;
  for (const auto& r : s.dev) lc_dev += r.source == "lc";
  CHECK(lc_dev == 3);
  CHECK(s.train.size() + s.dev.size() + s.test.size() == 90);
}

TEST_CASE("seeded_permutation") {
  const auto p = seeded_permutation(1000, 9);
  auto sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
  CHECK(seeded_permutation(1000, 9) == p);
  CHECK(seeded_permutation(1000, 10) != p);
  CHECK(seeded_permutation(0, 1).empty());
}

TEST_CASE("subsamples are nested") {
  const auto train = numbered_records(1000);
  std::set<std::string> previous = ids(train);
  for (std::uint32_t d : {2u, 4u, 8u, 16u, 32u, 64u}) {
    const auto sample = subsample(train, d, 5);
    CHECK(sample.size() == (train.size() + d - 1) / d);
    const auto current = ids(sample);
    CHECK(std::includes(previous.begin(), previous.end(), current.begin(), current.end()));
    previous = current;
    CHECK(std::is_sorted(sample.begin(), sample.end(),
                         [](const BibRecord& a, const BibRecord& b) { return a.record_id < b.record_id; }));
  }
  CHECK_THROWS_AS(subsample(train, 0, 1), ValidationError);
}

TEST_CASE("corpus TSV round-trips") {
  auto records = filter_entries(sample_arabic(), SafeTagList::Default());
  const std::string text = format_corpus(records);
  const auto back = parse_corpus(text, "sample.tsv");
  CHECK(format_corpus(back) == text);
  CHECK(back.size() == records.size());
  CHECK(back[0].source == "sample");
  CHECK(back[0].entries[0].id == back[0].record_id + ".1");
  const CorpusStats a = corpus_stats(records);
  const CorpusStats b = corpus_stats(back);
  CHECK(a.entries == b.entries);
  CHECK(a.tokens == b.tokens);
  CHECK(a.words == b.words);

  CHECK_THROWS_AS(parse_corpus("only\ttwo\n"), ParseError);
  CHECK_THROWS_AS(parse_corpus("\t245\tقبر\n"), ParseError);
  const auto unpaired = parse_corpus("r\t245\tقبر\n");
  CHECK_FALSE(unpaired[0].entries[0].romanized);
}

}  // namespace
}  // namespace alalc
