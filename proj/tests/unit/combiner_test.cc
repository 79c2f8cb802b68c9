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
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "alalc/combiner.h"
#include "alalc/error.h"
#include "alalc/script.h"
#include "alalc/unicode.h"
#include "doctest.h"
#include "oracles.h"
#include "test_data.h"

namespace alalc {
namespace {

std::vector<RomanToken> roman(const std::vector<std::string>& texts,
                              Provenance p = Provenance::kExternal) {
  std::vector<RomanToken> out;
  for (const std::string& t : texts) out.push_back({t, p});
  return out;
}

void check_invariants(const AlignmentResult& a, std::size_t n) {
  REQUIRE(a.pairs.size() == n);
  std::size_t dropped = 0;
  std::optional<std::size_t> last;
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(a.pairs[i].first == i);
    if (!a.pairs[i].second) {
      ++dropped;
      continue;
    }
    if (last) CHECK(*a.pairs[i].second > *last);
    last = a.pairs[i].second;
  }
  CHECK(dropped == a.dropped_sources);
}

TEST_CASE("levenshtein") {
  CHECK(levenshtein(U"", U"") == 0);
  CHECK(levenshtein(U"kitten", U"sitting") == 3);
  CHECK(levenshtein(U"Khassārah", U"Khasārah") == 1);
  CHECK(levenshtein(U"abc", U"") == 3);
}

TEST_CASE("identity alignment") {
  const auto seq = roman({"Qabr", "/", "Maḥmūd", "Taymūr", "."});
  const AlignmentResult a = align(seq, seq);
  check_invariants(a, seq.size());
  CHECK(a.total_cost == 0);
  CHECK(a.dropped_sources == 0);
  CHECK(a.extra_hypotheses == 0);
  const auto out = combine(seq, roman({"Qabr", "/", "Maḥmūd", "Taymūr", "."}, Provenance::kMle));
  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK(out[i].text == seq[i].text);
    CHECK(out[i].provenance == Provenance::kExternal);
  }
}

TEST_CASE("one dropped token") {
  const AlignmentResult a = align(roman({"A", "C"}), roman({"A", "B", "C"}));
  check_invariants(a, 3);
  CHECK(a.dropped_sources == 1);
  CHECK_FALSE(a.pairs[1].second);
  CHECK(a.total_cost == 1);
  CHECK(a.total_cost == testing::brute_force_alignment_cost({"A", "C"}, {"A", "B", "C"}));
}

TEST_CASE("hallucinated prefix still aligns") {
  const auto hyp = roman({"Taṣal-Idārīyah", "."});
  const auto backoff = roman({"al-Idārīyah", "."});
  const AlignmentResult a = align(hyp, backoff);
  CHECK(a.dropped_sources == 0);
  CHECK(a.pairs[0].second == std::optional<std::size_t>(0));
  CHECK(combine(hyp, backoff)[0].text == "Taṣal-Idārīyah");
}

TEST_CASE("extra hypothesis tokens are discarded") {
  const auto hyp = roman({"al-Qāhirah", "xyz", ":", "1927"});
  const auto backoff = roman({"al-Qāhirah", ":", "1927"});
  const AlignmentResult a = align(hyp, backoff);
  CHECK(a.extra_hypotheses == 1);
  const auto out = combine(hyp, backoff);
  REQUIRE(out.size() == 3);
  CHECK(out[1].text == ":");
}

TEST_CASE("case is ignored for alignment but kept in output") {
  const auto hyp = roman({"AL-QĀHIRAH"});
  const auto backoff = roman({"al-qāhirah"});
  CHECK(align(hyp, backoff).total_cost == 0);
  CHECK(combine(hyp, backoff)[0].text == "AL-QĀHIRAH");
  AlignOptions exact;
  exact.case_fold = false;
  CHECK(align(hyp, backoff, exact).total_cost > 0);
}

TEST_CASE("empty sides") {
  const auto backoff = roman({"a", "bb"});
  const auto out = combine({}, backoff);
  REQUIRE(out.size() == 2);
  CHECK(out[0].provenance == Provenance::kGapFill);
  CHECK(align({}, backoff).total_cost == 3);
  CHECK(align(backoff, {}).extra_hypotheses == 2);
  CHECK(combine({}, {}).empty());
}

TEST_CASE("ties prefer matches and the leftmost position") {
  // "a" can match either source "a"; the leftmost wins.
  const AlignmentResult a = align(roman({"a"}), roman({"a", "a"}));
  CHECK(a.pairs[0].second == std::optional<std::size_t>(0));
  CHECK_FALSE(a.pairs[1].second);
}

TEST_CASE("DP cost equals exhaustive search") {
  const std::vector<std::string> alphabet{"a", "b", "c"};
  std::size_t pairs = 0;
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) {
      std::size_t combos = 1;
      for (std::size_t k = 0; k < m + n; ++k) combos *= 3;
      for (std::size_t code = 0; code < combos; ++code) {
        std::vector<std::string> h;
        std::vector<std::string> b;
        std::size_t c = code;
        for (std::size_t k = 0; k < m + n; ++k, c /= 3) (k < m ? h : b).push_back(alphabet[c % 3]);
        const AlignmentResult a = align(roman(h), roman(b));
        CHECK(a.total_cost == testing::brute_force_alignment_cost(h, b));
        ++pairs;
      }
    }
  }
  CHECK(pairs > 1000);
}

TEST_CASE("DP cost equals exhaustive search on multi-letter tokens") {
  std::mt19937_64 rng(99);
  const std::vector<std::string> vocab{"a", "ab", "ba", "abc", "cc", "bca", "c"};
  for (int round = 0; round < 3000; ++round) {
    std::vector<std::string> h(rng() % 7);
    std::vector<std::string> b(rng() % 7);
    for (auto& t : h) t = vocab[rng() % vocab.size()];
    for (auto& t : b) t = vocab[rng() % vocab.size()];
    const AlignmentResult a = align(roman(h), roman(b));
    check_invariants(a, b.size());
    REQUIRE(a.total_cost == testing::brute_force_alignment_cost(h, b));
  }
}

TEST_CASE("constant gap cost") {
  AlignOptions options;
  options.gap_cost = AlignOptions::GapCost::kConstant;
  options.constant_gap = 1;
  const AlignmentResult a = align(roman({"abcdef"}), roman({"xyz", "abcdef"}), options);
  CHECK(a.total_cost == 1);
  CHECK(a.dropped_sources == 1);
}

TEST_CASE("deleted tokens are restored from the backoff") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> vocab{"kitāb", "al-Qāhirah", "Maḥmūd", "Taymūr", "1927",
                                       ":", ".", "fī", "al-naḥw", "Dār"};
  std::vector<std::string> perfect(2000);
  for (auto& t : perfect) t = vocab[rng() % vocab.size()];
  std::vector<RomanToken> hyp;
  std::set<std::size_t> deleted;
  for (std::size_t i = 0; i < perfect.size(); ++i) {
    if (rng() % 50 == 0) {
      deleted.insert(i);
    } else {
      hyp.push_back({perfect[i], Provenance::kExternal});
    }
  }
  const auto out = combine(hyp, roman(perfect, Provenance::kMle));
  REQUIRE(out.size() == perfect.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK(out[i].text == perfect[i]);
  }
  // Equal-text tokens may swap which copy is gap-filled; counts must agree.
  std::size_t gapfilled = 0;
  for (const auto& t : out) gapfilled += t.provenance == Provenance::kGapFill;
  CHECK(gapfilled == deleted.size());
}

TEST_CASE("parse_predictions") {
  const auto preds = parse_predictions(
      "# comment\n"
      "r.1\tQabr / Maḥmūd Taymūr.\n"
      "r.2\tal-Qāhirah\tmle\n");
  REQUIRE(preds.size() == 2);
  CHECK(preds[0].entry_id == "r.1");
  CHECK_FALSE(preds[0].provenances);
  REQUIRE(preds[1].provenances);
  CHECK(*preds[1].provenances == std::vector<Provenance>{Provenance::kMle});

  try {
    parse_predictions("r.1\tA\nno tab here\n", "p.tsv");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_predictions("r.1\tA\nr.1\tB\n"), ParseError);
  CHECK_THROWS_AS(parse_predictions("r.1\tA\tbogus\n"), ParseError);
}

TEST_CASE("ingest_predictions") {
  const auto preds = parse_predictions("r.1\tQabr / Maḥmūd Taymūr.\n");
  const auto map = ingest_predictions(preds, {"r.1", "r.2"});
  REQUIRE(map.contains("r.1"));
  CHECK(map.at("r.1").size() == 5);
  CHECK_FALSE(map.contains("r.2"));
  CHECK_THROWS_AS(ingest_predictions(preds, {"r.9"}), ValidationError);
}

TEST_CASE("format_prediction round-trips through parse") {
  Layout layout;
  tokenize("قبر / محمود تيمور.", layout);
  const auto tokens = roman({"Qabr", "/", "Maḥmūd", "Taymūr", "."}, Provenance::kMle);
  const std::string line = format_prediction("r.2", tokens, layout);
  CHECK(line == "r.2\tQabr / Maḥmūd Taymūr.\tmle,mle,mle,mle,mle");
  const auto back = parse_predictions(line);
  CHECK(back[0].line == "Qabr / Maḥmūd Taymūr.");
  CHECK(format_prediction("r.2", tokens, layout, false) == "r.2\tQabr / Maḥmūd Taymūr.");
}

}  // namespace
}  // namespace alalc
