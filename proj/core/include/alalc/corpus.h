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
#ifndef ALALC_CORPUS_H_
#define ALALC_CORPUS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alalc/script.h"

namespace alalc {

class SafeTagList {
 public:
  // Throws ValidationError on an empty list or a tag that is not 3 digits.
  explicit SafeTagList(std::set<std::string> tags);
  static SafeTagList Default();
  static SafeTagList Parse(std::string_view text, const std::string& source = "<memory>");
  static SafeTagList Load(const std::filesystem::path& path);

  bool contains(std::string_view tag) const { return tags_.contains(std::string(tag)); }
  const std::set<std::string>& tags() const { return tags_; }

 private:
  std::set<std::string> tags_;
};

struct FilterStats {
  std::size_t entries_in = 0;
  std::size_t entries_kept = 0;
  std::size_t records_in = 0;
  std::size_t records_kept = 0;
};

std::vector<BibRecord> filter_entries(std::vector<BibRecord> records,
                                      const SafeTagList& safe_tags,
                                      FilterStats* stats = nullptr);

struct CleanLog {
  std::size_t whitespace_fixes = 0;
  std::size_t punctuation_mapped = 0;
  std::size_t punctuation_attached = 0;
  std::size_t bidi_resyncs = 0;
  std::size_t conjunctions_merged = 0;
  std::vector<std::string> messages;

  std::size_t total() const {
    return whitespace_fixes + punctuation_mapped + punctuation_attached +
           bidi_resyncs + conjunctions_merged;
  }
  void merge(const CleanLog& other);
};

std::pair<std::string, std::string> clean_entry(std::string_view arabic_line,
                                                std::string_view roman_line,
                                                CleanLog* log = nullptr);
// Cleans and re-tokenizes every entry that has a Roman side.
void clean_records(std::vector<BibRecord>& records, CleanLog* log = nullptr);

struct MismatchStats {
  std::size_t entries_in = 0;
  std::size_t dropped = 0;
  std::size_t records_dropped = 0;

  double removal_rate() const {
    return entries_in == 0 ? 0.0 : static_cast<double>(dropped) / entries_in;
  }
};

std::vector<Entry> drop_mismatched(std::vector<Entry> entries,
                                   MismatchStats* stats = nullptr);
// Also drops records left without entries.
std::vector<BibRecord> drop_mismatched(std::vector<BibRecord> records,
                                       MismatchStats* stats = nullptr);

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

struct SplitSpec {
  Fraction train{8, 10};
  Fraction dev{1, 10};
  Fraction test{1, 10};
  std::uint64_t seed = 0;
  // Split each source (input file) separately, then concatenate.
  bool stratify_by_source = false;

  // "80/10/10" or "0.8/0.1/0.1"; throws ValidationError.
  static SplitSpec Parse(std::string_view ratios, std::uint64_t seed = 0);
  void validate() const;
};

// Record counts per split; boundaries are ceil(N * cumulative fraction).
std::array<std::size_t, 3> split_counts(std::size_t n, const SplitSpec& spec);

struct SplitResult {
  std::vector<BibRecord> train;
  std::vector<BibRecord> dev;
  std::vector<BibRecord> test;
};

SplitResult split_records(std::vector<BibRecord> records, const SplitSpec& spec);

// Deterministic permutation of [0, n): Fisher-Yates on mt19937_64.
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed);

// The first ceil(N/d) records of a seeded permutation, in original order;
// samples for 2d are therefore subsets of samples for d.
std::vector<BibRecord> subsample(std::span<const BibRecord> train,
                                 std::uint32_t denominator, std::uint64_t seed);

struct CorpusStats {
  std::size_t records = 0;
  std::size_t entries = 0;
  std::size_t tokens = 0;
  std::size_t words = 0;
};
CorpusStats corpus_stats(std::span<const BibRecord> records);

// One entry per line: record_id TAB tag TAB arabic_line TAB roman_line.
void write_corpus(std::ostream& out, std::span<const BibRecord> records);
std::string format_corpus(std::span<const BibRecord> records);
std::vector<BibRecord> parse_corpus(std::string_view text,
                                    const std::string& source = "<memory>");
std::vector<BibRecord> read_corpus(const std::filesystem::path& path);
std::vector<Entry> flatten_entries(std::span<const BibRecord> records);

}  // namespace alalc

#endif  // ALALC_CORPUS_H_
