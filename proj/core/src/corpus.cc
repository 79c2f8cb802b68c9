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
#include "alalc/corpus.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "alalc/error.h"
#include "alalc/unicode.h"

namespace alalc {
namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::array<std::string_view, 27> kDefaultTags = {
    "100", "110", "111", "130", "240", "245", "246", "250", "260",
    "264", "440", "490", "505", "600", "610", "611", "630", "650",
    "651", "700", "710", "711", "730", "740", "800", "810", "830",
};

constexpr std::u32string_view kClosing = U".,،;؛?؟!)]»";
constexpr std::u32string_view kOpening = U"([«";

char32_t latin_punct(char32_t c) {
  switch (c) {
    case U'،': return U',';
    case U'؛': return U';';
    case U'؟': return U'?';
    case U'٪': return U'%';
    case U'٫': return U'.';
    default: return c;
  }
}

std::u32string collapse(std::u32string_view s, std::size_t& fixes) {
  std::u32string out;
  bool pending = false;
  bool changed = false;
  for (char32_t c : s) {
    if (is_whitespace(c)) {
      if (c != U' ' || pending || out.empty()) changed = true;
      pending = !out.empty();
      continue;
    }
    if (pending) out += U' ';
    pending = false;
    out += c;
  }
  if (pending) changed = true;
  if (changed) ++fixes;
  return out;
}

std::u32string attach(std::u32string_view s, std::size_t& fixes) {
  std::u32string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == U' ') {
      const bool before_closing = i + 1 < s.size() && kClosing.find(s[i + 1]) != std::u32string_view::npos;
      const bool after_opening = !out.empty() && kOpening.find(out.back()) != std::u32string_view::npos;
      if (before_closing || after_opening) {
        ++fixes;
        continue;
      }
    }
    out += s[i];
  }
  return out;
}

std::vector<std::u32string> split_spaces(const std::u32string& s) {
  std::vector<std::u32string> out;
  std::size_t start = 0;
  while (start <= s.size() && !s.empty()) {
    const std::size_t sp = s.find(U' ', start);
    out.push_back(s.substr(start, sp - start));
    if (sp == std::u32string::npos) break;
    start = sp + 1;
  }
  return out;
}

std::u32string join_spaces(const std::vector<std::u32string>& parts) {
  std::u32string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += U' ';
    out += p;
  }
  return out;
}

bool starts_with_wa(std::u32string_view token) {
  return token.size() > 3 && (token[0] == U'w' || token[0] == U'W') &&
         token[1] == U'a' && token[2] == U'-';
}

std::string trim_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::size_t bounded(std::mt19937_64& rng, std::size_t bound) {
  // Rejection sampling keeps the result independent of the platform's
  // distribution implementation.
  const std::uint64_t n = bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<std::size_t>(x % n);
}

Fraction parse_fraction_part(std::string_view text) {
  const std::size_t dot = text.find('.');
  Fraction f{0, 1};
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i == dot) continue;
    if (text[i] < '0' || text[i] > '9') {
      throw ValidationError("bad split ratio '" + std::string(text) + "'");
    }
    any = true;
    f.num = f.num * 10 + static_cast<std::uint64_t>(text[i] - '0');
    if (dot != std::string_view::npos && i > dot) f.den *= 10;
  }
  if (!any) throw ValidationError("empty split ratio");
  return f;
}

SplitResult split_group(std::vector<BibRecord> records, const SplitSpec& spec) {
  std::sort(records.begin(), records.end(),
            [](const BibRecord& a, const BibRecord& b) { return a.record_id < b.record_id; });
  const std::vector<std::size_t> order = seeded_permutation(records.size(), spec.seed);
  const auto counts = split_counts(records.size(), spec);
  SplitResult out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    BibRecord& r = records[order[k]];
    if (k < counts[0]) {
      out.train.push_back(std::move(r));
    } else if (k < counts[0] + counts[1]) {
      out.dev.push_back(std::move(r));
    } else {
      out.test.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

SafeTagList::SafeTagList(std::set<std::string> tags) : tags_(std::move(tags)) {
  if (tags_.empty()) throw ValidationError("safe tag list is empty");
  for (const std::string& tag : tags_) {
    if (tag.size() != 3 || !std::all_of(tag.begin(), tag.end(),
                                        [](char c) { return c >= '0' && c <= '9'; })) {
      throw ValidationError("bad MARC tag '" + tag + "'");
    }
  }
}

SafeTagList SafeTagList::Default() {
  return SafeTagList(std::set<std::string>(kDefaultTags.begin(), kDefaultTags.end()));
}

SafeTagList SafeTagList::Parse(std::string_view text, const std::string& source) {
  std::set<std::string> tags;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim_cr(line);
    const std::size_t hash = line.find('#');
    std::istringstream words(line.substr(0, hash));
    std::string tag;
    while (words >> tag) {
      if (tag.size() != 3 || !std::all_of(tag.begin(), tag.end(),
                                          [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError(source, line_no, "bad MARC tag '" + tag + "'");
      }
      tags.insert(tag);
    }
  }
  return SafeTagList(std::move(tags));
}

SafeTagList SafeTagList::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str(), path.string());
}

std::vector<BibRecord> filter_entries(std::vector<BibRecord> records,
                                      const SafeTagList& safe_tags,
                                      FilterStats* stats) {
  FilterStats local;
  FilterStats& s = stats != nullptr ? *stats : local;
  s.records_in += records.size();
  for (BibRecord& r : records) {
    s.entries_in += r.entries.size();
    std::erase_if(r.entries, [&](const Entry& e) { return !safe_tags.contains(e.tag); });
    s.entries_kept += r.entries.size();
  }
  std::erase_if(records, [](const BibRecord& r) { return r.entries.empty(); });
  s.records_kept += records.size();
  return records;
}

void CleanLog::merge(const CleanLog& other) {
  whitespace_fixes += other.whitespace_fixes;
  punctuation_mapped += other.punctuation_mapped;
  punctuation_attached += other.punctuation_attached;
  bidi_resyncs += other.bidi_resyncs;
  conjunctions_merged += other.conjunctions_merged;
  messages.insert(messages.end(), other.messages.begin(), other.messages.end());
}

std::pair<std::string, std::string> clean_entry(std::string_view arabic_line,
                                                std::string_view roman_line,
                                                CleanLog* log) {
  CleanLog local;
  CleanLog& l = log != nullptr ? *log : local;
  const PunctuationSet punct = PunctuationSet::Default();

  std::u32string ar = collapse(to_u32(nfc(arabic_line)), l.whitespace_fixes);
  std::u32string ro = collapse(to_u32(nfc(roman_line)), l.whitespace_fixes);

  for (char32_t& c : ro) {
    const char32_t mapped = latin_punct(c);
    if (mapped != c) {
      c = mapped;
      ++l.punctuation_mapped;
    }
  }
  ar = attach(ar, l.punctuation_attached);
  ro = attach(ro, l.punctuation_attached);

  // Leading Arabic punctuation that belongs at the end (visual-order damage).
  std::size_t lead = 0;
  while (lead < ar.size() && punct.contains(ar[lead]) &&
         kOpening.find(ar[lead]) == std::u32string_view::npos) {
    ++lead;
  }
  if (lead > 0 && lead < ar.size() && !punct.contains(ar.back())) {
    std::u32string moved = ar.substr(0, lead);
    std::u32string latin = moved;
    for (char32_t& c : latin) c = latin_punct(c);
    if (ro.size() > latin.size() && ro.ends_with(latin) &&
        !ro.starts_with(latin)) {
      std::size_t start = lead;
      while (start < ar.size() && ar[start] == U' ') ++start;
      ar = ar.substr(start) + moved;
      ++l.bidi_resyncs;
      l.messages.push_back("moved leading '" + to_utf8(moved) + "' to end");
    }
  }

  std::vector<std::u32string> ar_words = split_spaces(ar);
  const std::vector<std::u32string> ro_words = split_spaces(ro);
  for (std::size_t k = 0; k + 1 < ar_words.size(); ++k) {
    if (ar_words[k] == U"و" && k < ro_words.size() && starts_with_wa(ro_words[k])) {
      ar_words[k] += ar_words[k + 1];
      ar_words.erase(ar_words.begin() + static_cast<std::ptrdiff_t>(k) + 1);
      ++l.conjunctions_merged;
      l.messages.push_back("merged conjunction into '" + to_utf8(ar_words[k]) + "'");
    }
  }
  ar = join_spaces(ar_words);
  return {nfc(to_utf8(ar)), nfc(to_utf8(ro))};
}

void clean_records(std::vector<BibRecord>& records, CleanLog* log) {
  for (BibRecord& r : records) {
    for (Entry& e : r.entries) {
      if (!e.roman_line) continue;
      auto [ar, ro] = clean_entry(e.arabic_line, *e.roman_line, log);
      e = make_entry(std::move(e.id), std::move(e.record_id), std::move(e.tag), ar, ro);
    }
  }
}

std::vector<Entry> drop_mismatched(std::vector<Entry> entries, MismatchStats* stats) {
  MismatchStats local;
  MismatchStats& s = stats != nullptr ? *stats : local;
  s.entries_in += entries.size();
  const std::size_t before = entries.size();
  std::erase_if(entries, [](const Entry& e) {
    return !e.romanized || e.tokens.empty() || e.romanized->size() != e.tokens.size();
  });
  s.dropped += before - entries.size();
  return entries;
}

std::vector<BibRecord> drop_mismatched(std::vector<BibRecord> records,
                                       MismatchStats* stats) {
  MismatchStats local;
  MismatchStats& s = stats != nullptr ? *stats : local;
  for (BibRecord& r : records) r.entries = drop_mismatched(std::move(r.entries), &s);
  const std::size_t before = records.size();
  std::erase_if(records, [](const BibRecord& r) { return r.entries.empty(); });
  s.records_dropped += before - records.size();
  return records;
}

SplitSpec SplitSpec::Parse(std::string_view ratios, std::uint64_t seed) {
  std::vector<Fraction> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = ratios.find('/', start);
    parts.push_back(parse_fraction_part(ratios.substr(start, slash - start)));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  if (parts.size() != 3) throw ValidationError("split needs three ratios, e.g. 80/10/10");
  // Bring to a common denominator, then normalize by the sum.
  const std::uint64_t den = std::lcm(parts[0].den, std::lcm(parts[1].den, parts[2].den));
  std::array<std::uint64_t, 3> num{};
  for (std::size_t i = 0; i < 3; ++i) num[i] = parts[i].num * (den / parts[i].den);
  const std::uint64_t total = num[0] + num[1] + num[2];
  SplitSpec spec;
  spec.train = {num[0], total};
  spec.dev = {num[1], total};
  spec.test = {num[2], total};
  spec.seed = seed;
  spec.validate();
  return spec;
}

void SplitSpec::validate() const {
  for (const Fraction& f : {train, dev, test}) {
    if (f.num == 0 || f.den == 0) throw ValidationError("split fractions must be positive");
  }
  // a/b + c/d + e/f == 1, compared in 128 bits.
  const u128 lhs = static_cast<u128>(train.num) * dev.den * test.den +
                   static_cast<u128>(dev.num) * train.den * test.den +
                   static_cast<u128>(test.num) * train.den * dev.den;
  const u128 rhs = static_cast<u128>(train.den) * dev.den * test.den;
  if (lhs != rhs) throw ValidationError("split fractions must sum to 1");
}

std::array<std::size_t, 3> split_counts(std::size_t n, const SplitSpec& spec) {
  spec.validate();
  auto ceil_mul = [n](std::uint64_t num, std::uint64_t den) {
    const u128 x = static_cast<u128>(n) * num;
    return static_cast<std::size_t>((x + den - 1) / den);
  };
  const std::size_t b1 = ceil_mul(spec.train.num, spec.train.den);
  // train + dev as one fraction.
  const u128 num2 = static_cast<u128>(spec.train.num) * spec.dev.den +
                    static_cast<u128>(spec.dev.num) * spec.train.den;
  const u128 den2 = static_cast<u128>(spec.train.den) * spec.dev.den;
  const u128 x = static_cast<u128>(n) * num2;
  const std::size_t b2 = static_cast<std::size_t>((x + den2 - 1) / den2);
  return {b1, b2 - b1, n - b2};
}

std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[bounded(rng, i)]);
  }
  return order;
}

SplitResult split_records(std::vector<BibRecord> records, const SplitSpec& spec) {
  spec.validate();
  if (!spec.stratify_by_source) return split_group(std::move(records), spec);
  std::map<std::string, std::vector<BibRecord>> groups;
  for (BibRecord& r : records) groups[r.source].push_back(std::move(r));
  SplitResult out;
  for (auto& [source, group] : groups) {
    SplitResult part = split_group(std::move(group), spec);
    std::move(part.train.begin(), part.train.end(), std::back_inserter(out.train));
    std::move(part.dev.begin(), part.dev.end(), std::back_inserter(out.dev));
    std::move(part.test.begin(), part.test.end(), std::back_inserter(out.test));
  }
  return out;
}

std::vector<BibRecord> subsample(std::span<const BibRecord> train,
                                 std::uint32_t denominator, std::uint64_t seed) {
  if (denominator == 0) throw ValidationError("subsample denominator must be positive");
  const std::vector<std::size_t> order = seeded_permutation(train.size(), seed);
  const std::size_t keep = (train.size() + denominator - 1) / denominator;
  std::vector<std::size_t> chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep));
  std::sort(chosen.begin(), chosen.end());
  std::vector<BibRecord> out;
  out.reserve(keep);
  for (std::size_t i : chosen) out.push_back(train[i]);
  return out;
}

CorpusStats corpus_stats(std::span<const BibRecord> records) {
  CorpusStats s;
  s.records = records.size();
  for (const BibRecord& r : records) {
    s.entries += r.entries.size();
    for (const Entry& e : r.entries) {
      s.tokens += e.tokens.size();
      if (e.romanized) s.words += count_words(*e.romanized);
    }
  }
  return s;
}

void write_corpus(std::ostream& out, std::span<const BibRecord> records) {
  for (const BibRecord& r : records) {
    for (const Entry& e : r.entries) {
      out << r.record_id << '\t' << e.tag << '\t' << e.arabic_line;
      if (e.roman_line) out << '\t' << *e.roman_line;
      out << '\n';
    }
  }
}

std::string format_corpus(std::span<const BibRecord> records) {
  std::ostringstream out;
  write_corpus(out, records);
  return out.str();
}

std::vector<BibRecord> parse_corpus(std::string_view text, const std::string& source) {
  std::vector<BibRecord> records;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  const std::string stem = std::filesystem::path(source).stem().string();
  while (std::getline(in, line)) {
    ++line_no;
    line = trim_cr(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      f.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (f.size() != 3 && f.size() != 4) {
      throw ParseError(source, line_no, "expected RECORD_ID<TAB>TAG<TAB>ARABIC[<TAB>ROMAN]");
    }
    if (f[0].empty()) throw ParseError(source, line_no, "empty record id");
    if (records.empty() || records.back().record_id != f[0]) {
      records.push_back({f[0], "ara", stem, {}});
    }
    BibRecord& r = records.back();
    std::optional<std::string> roman;
    if (f.size() == 4) roman = nfc(f[3]);
    r.entries.push_back(make_entry(r.record_id + "." + std::to_string(r.entries.size() + 1),
                                   r.record_id, f[1], nfc(f[2]),
                                   roman ? std::optional<std::string_view>(*roman)
                                         : std::nullopt));
  }
  return records;
}

std::vector<BibRecord> read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str(), path.string());
}

std::vector<Entry> flatten_entries(std::span<const BibRecord> records) {
  std::vector<Entry> out;
  for (const BibRecord& r : records) out.insert(out.end(), r.entries.begin(), r.entries.end());
  return out;
}

}  // namespace alalc
