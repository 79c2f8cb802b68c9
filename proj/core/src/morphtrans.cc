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
#include "alalc/morphtrans.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "alalc/chartrans.h"
#include "alalc/error.h"
#include "alalc/unicode.h"

namespace alalc {
namespace {

constexpr char32_t kFatha = 0x064E;
constexpr char32_t kDamma = 0x064F;
constexpr char32_t kKasra = 0x0650;
constexpr char32_t kFathatan = 0x064B;
constexpr char32_t kDammatan = 0x064C;
constexpr char32_t kKasratan = 0x064D;
constexpr char32_t kShadda = 0x0651;

bool is_case_mark(char32_t c) {
  return c == kFatha || c == kDamma || c == kKasra || c == kFathatan ||
         c == kDammatan || c == kKasratan;
}

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

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Index one past the last base letter of `s` (trailing marks excluded).
std::size_t base_end(const std::u32string& s) {
  std::size_t end = s.size();
  while (end > 0 && is_arabic_diacritic(s[end - 1])) --end;
  return end;
}

// Diacritized per-segment strings, or nullopt when the diacritized form does
// not spell the segmentation.
std::optional<std::vector<std::u32string>> split_diacritized(
    const MorphAnnotation& ann) {
  const std::u32string diac = to_u32(nfc(ann.diacritized));
  std::vector<std::u32string> out;
  std::size_t pos = 0;
  while (pos < diac.size() && is_arabic_diacritic(diac[pos])) ++pos;
  if (pos != 0) return std::nullopt;
  for (const Segment& seg : ann.segments) {
    std::u32string piece;
    for (char32_t letter : to_u32(seg.morpheme)) {
      if (pos >= diac.size() || diac[pos] != letter) return std::nullopt;
      piece.push_back(diac[pos++]);
      while (pos < diac.size() && is_arabic_diacritic(diac[pos])) {
        piece.push_back(diac[pos++]);
      }
    }
    out.push_back(std::move(piece));
  }
  if (pos != diac.size()) return std::nullopt;
  return out;
}

// Case endings are dropped: trailing short vowels and tanwin, and the alif
// carrying a fathatan.
void strip_case_ending(std::u32string& stem) {
  bool removed_fathatan = false;
  std::size_t end = base_end(stem);
  for (std::size_t i = stem.size(); i > end; --i) {
    if (is_case_mark(stem[i - 1])) {
      removed_fathatan = removed_fathatan || stem[i - 1] == kFathatan;
      stem.erase(i - 1, 1);
    }
  }
  end = base_end(stem);
  if (end > 0 && (stem[end - 1] == U'ا' || stem[end - 1] == U'ى')) {
    // Fathatan written on the consonant before the supporting alif.
    std::size_t before = end - 1;
    std::size_t cluster_start = before;
    while (cluster_start > 0 && is_arabic_diacritic(stem[cluster_start - 1])) {
      --cluster_start;
    }
    const std::u32string_view cluster = std::u32string_view(stem).substr(cluster_start, before - cluster_start);
    const std::size_t ft = cluster.find(kFathatan);
    if (ft != std::u32string_view::npos) {
      stem.erase(before, stem.size() - before);
      stem.erase(cluster_start + ft, 1);
    } else if (removed_fathatan && stem[end - 1] == U'ا') {
      stem.erase(end - 1);
    }
  }
}

bool ends_with_bare(const std::u32string& s, std::u32string_view suffix) {
  std::u32string bare;
  for (char32_t c : s) {
    if (!is_arabic_diacritic(c)) bare.push_back(c);
  }
  return bare.size() >= suffix.size() &&
         std::u32string_view(bare).substr(bare.size() - suffix.size()) == suffix;
}

}  // namespace

bool is_valid_annotation(const MorphAnnotation& ann, std::string_view surface) {
  std::string joined;
  int stems = 0;
  SegmentRole last = SegmentRole::kProclitic;
  for (const Segment& seg : ann.segments) {
    if (seg.morpheme.empty()) return false;
    if (static_cast<int>(seg.role) < static_cast<int>(last)) return false;
    if (seg.role == SegmentRole::kStem && ++stems > 1) return false;
    last = seg.role;
    joined += seg.morpheme;
  }
  return stems == 1 && joined == strip_diacritics(surface) &&
         strip_diacritics(nfc(ann.diacritized)) == joined;
}

void apply_pos_field(std::string_view pos, MorphAnnotation& ann) {
  std::size_t bar = pos.find('|');
  ann.pos = std::string(pos.substr(0, bar));
  ann.is_proper_noun = ann.pos == "noun_prop";
  while (bar != std::string_view::npos) {
    pos.remove_prefix(bar + 1);
    bar = pos.find('|');
    const std::string_view flag = pos.substr(0, bar);
    if (flag == "prop") ann.is_proper_noun = true;
    if (flag == "construct") ann.construct = true;
    if (flag == "caps") ann.gloss_capitalized = true;
  }
}

std::vector<Segment> parse_segmentation(std::string_view text) {
  std::vector<Segment> segments;
  std::istringstream in{std::string(text)};
  std::string piece;
  while (in >> piece) {
    Segment seg;
    if (piece.size() > 1 && piece.back() == '+') {
      seg.role = SegmentRole::kProclitic;
      piece.pop_back();
    } else if (piece.size() > 1 && piece.front() == '+') {
      seg.role = SegmentRole::kEnclitic;
      piece.erase(0, 1);
    }
    seg.morpheme = nfc(piece);
    segments.push_back(std::move(seg));
  }
  return segments;
}

std::string format_segmentation(std::span<const Segment> segments) {
  std::string out;
  for (const Segment& seg : segments) {
    if (!out.empty()) out += ' ';
    if (seg.role == SegmentRole::kEnclitic) out += '+';
    out += seg.morpheme;
    if (seg.role == SegmentRole::kProclitic) out += '+';
  }
  return out;
}

AnnotationFileAdapter AnnotationFileAdapter::Load(
    const std::filesystem::path& path) {
  return Parse(read_file(path), path.string());
}

AnnotationFileAdapter AnnotationFileAdapter::Parse(std::string_view text,
                                                   const std::string& source) {
  AnnotationFileAdapter adapter;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string_view> f = split_tabs(line);
    if (f.size() != 6) {
      throw ParseError(source, line_no,
                       "expected 6 fields, got " + std::to_string(f.size()));
    }
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(std::string(f[1]), &used);
      if (used != f[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError(source, line_no, "bad token index '" + std::string(f[1]) + "'");
    }
    if (f[5] != "0" && f[5] != "1") {
      throw ParseError(source, line_no, "gloss_caps must be 0 or 1");
    }
    MorphAnnotation ann;
    ann.diacritized = nfc(f[2]);
    ann.segments = f[3] == "-" ? std::vector<Segment>{{strip_diacritics(ann.diacritized),
                                                       SegmentRole::kStem}}
                               : parse_segmentation(f[3]);
    apply_pos_field(f[4], ann);
    ann.gloss_capitalized = f[5] == "1";
    auto key = std::make_pair(std::string(f[0]), index);
    if (adapter.records_.contains(key)) {
      throw ParseError(source, line_no, "duplicate annotation for " +
                                           key.first + " #" + std::string(f[1]));
    }
    adapter.records_.emplace(std::move(key), std::move(ann));
  }
  return adapter;
}

std::optional<MorphAnnotation> AnnotationFileAdapter::annotate(
    const AnnotationContext& context) const {
  auto it = records_.find({std::string(context.entry_id), context.index});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

NaiveAnalyzer NaiveAnalyzer::Load(const std::filesystem::path& lexicon,
                                  const std::filesystem::path& gazetteer) {
  NaiveAnalyzer analyzer;
  auto each_line = [](const std::filesystem::path& path, auto&& fn) {
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      fn(line);
    }
  };
  each_line(lexicon, [&](const std::string& line) {
    const std::vector<std::string_view> f = split_tabs(line);
    analyzer.add_word(f[0], f.size() > 1 ? f[1] : "noun");
  });
  each_line(gazetteer, [&](const std::string& line) {
    analyzer.add_proper_noun(split_tabs(line)[0]);
  });
  return analyzer;
}

void NaiveAnalyzer::add_word(std::string_view diacritized, std::string_view pos) {
  const std::string form = nfc(diacritized);
  lexicon_[strip_diacritics(form)] = {form, std::string(pos)};
}

void NaiveAnalyzer::add_proper_noun(std::string_view diacritized) {
  add_word(diacritized, "noun_prop");
}

const NaiveAnalyzer::LexEntry* NaiveAnalyzer::find(std::string_view bare) const {
  auto it = lexicon_.find(std::string(bare));
  return it == lexicon_.end() ? nullptr : &it->second;
}

bool NaiveAnalyzer::is_proper(std::string_view bare) const {
  const LexEntry* e = find(bare);
  return e != nullptr && e->pos == "noun_prop";
}

std::optional<MorphAnnotation> NaiveAnalyzer::annotate(
    const AnnotationContext& context) const {
  const ArabicToken& token = context.tokens[context.index];
  if (token.kind != TokenKind::kWord) return std::nullopt;

  struct Proclitic {
    std::u32string_view bare;
    std::u32string_view diacritized;
    int stage;
  };
  // Longest first; stage enforces conjunction < preposition < article.
  static constexpr std::array<Proclitic, 6> kProclitics = {{
      {U"ال", U"الْ", 3},
      {U"و", U"وَ", 1},
      {U"ف", U"فَ", 1},
      {U"ب", U"بِ", 2},
      {U"ل", U"لِ", 2},
      {U"ك", U"كَ", 2},
  }};

  const std::u32string surface = to_u32(token.surface);
  std::size_t offset = 0;
  int stage = 0;
  MorphAnnotation ann;
  std::u32string diacritized;
  while (true) {
    const std::u32string_view rest = std::u32string_view(surface).substr(offset);
    if (const LexEntry* entry = find(to_utf8(rest))) {
      ann.segments.push_back({to_utf8(rest), SegmentRole::kStem});
      diacritized += to_u32(entry->diacritized);
      ann.diacritized = to_utf8(diacritized);
      apply_pos_field(entry->pos, ann);
      break;
    }
    bool stripped = false;
    // ل + ل: the article after li- loses its alif.
    if (stage == 2 && !ann.segments.empty() && ann.segments.back().morpheme == "ل" &&
        rest.size() > 2 && rest.front() == U'ل') {
      ann.segments.push_back({"ل", SegmentRole::kProclitic});
      diacritized += U"لْ";
      offset += 1;
      stage = 3;
      continue;
    }
    for (const Proclitic& p : kProclitics) {
      if (p.stage > stage && rest.size() >= p.bare.size() + 2 &&
          rest.substr(0, p.bare.size()) == p.bare) {
        ann.segments.push_back({to_utf8(p.bare), SegmentRole::kProclitic});
        diacritized += p.diacritized;
        offset += p.bare.size();
        stage = p.stage;
        stripped = true;
        break;
      }
    }
    if (!stripped) return std::nullopt;
  }

  const bool has_article = stage == 3;
  if (!has_article && !ann.is_proper_noun && !surface.empty() &&
      surface.back() == U'ة' && context.index + 1 < context.tokens.size()) {
    const ArabicToken& next = context.tokens[context.index + 1];
    if (next.kind == TokenKind::kWord &&
        (next.surface.starts_with("ال") || is_proper(next.surface))) {
      ann.construct = true;
    }
  }
  return ann;
}

std::optional<MorphAnnotation> annotate(const ArabicToken& token,
                                        const AnnotationContext& context,
                                        const AnalyzerAdapter& adapter) {
  if (token.kind != TokenKind::kWord) return std::nullopt;
  return adapter.annotate(context);
}

RomanToken morphtrans_word(const ArabicToken& token, const MorphAnnotation& ann,
                           const RuleTable& table, Diagnostics* diag) {
  auto pieces = is_valid_annotation(ann, token.surface)
                    ? split_diacritized(ann)
                    : std::nullopt;
  if (!pieces) {
    if (diag != nullptr) ++diag->morph_backoffs;
    return chartrans_word(token, table, diag);
  }
  std::vector<std::u32string>& seg = *pieces;
  std::size_t stem = 0;
  bool has_enclitic = false;
  bool has_article = false;
  for (std::size_t i = 0; i < ann.segments.size(); ++i) {
    if (ann.segments[i].role == SegmentRole::kStem) stem = i;
    if (ann.segments[i].role == SegmentRole::kEnclitic) has_enclitic = true;
    if (ann.segments[i].role == SegmentRole::kProclitic &&
        (ann.segments[i].morpheme == "ال" ||
         (i > 0 && ann.segments[i].morpheme == "ل" &&
          ann.segments[i - 1].morpheme == "ل"))) {
      has_article = true;
    }
  }
  std::u32string& stem_text = seg[stem];

  // (1) case endings of nominals, kept before a pronominal enclitic.
  const bool nominal = ann.pos.empty() || ann.pos.starts_with("noun") ||
                       ann.pos.starts_with("adj");
  if (nominal && !has_enclitic) strip_case_ending(stem_text);

  // (2) silent alif of the masculine plural verb ending.
  if (ends_with_bare(stem_text, U"وا")) {
    const std::size_t alif = base_end(stem_text) - 1;
    std::size_t waw = alif;
    while (waw > 0 && stem_text[waw - 1] != U'و') --waw;
    const bool damma_before = waw >= 2 && stem_text[waw - 2] == kDamma;
    if (ann.pos.starts_with("verb") || damma_before) stem_text.erase(alif);
  }

  // (3) ta marbuta: t in construct state or before an enclitic.
  const std::size_t last = base_end(stem_text);
  if (last > 0 && stem_text[last - 1] == U'ة' && (ann.construct || has_enclitic)) {
    stem_text[last - 1] = U'ت';
  }

  // No assimilation shadda on the sun letter after the article.
  if (has_article && stem_text.size() > 1) {
    std::size_t k = 1;
    while (k < stem_text.size() && is_arabic_diacritic(stem_text[k])) {
      if (stem_text[k] == kShadda) {
        stem_text.erase(k, 1);
        break;
      }
      ++k;
    }
  }

  // (4) + (5): Romanize each segment, hyphenate proclitics.
  std::string out;
  std::size_t prefix_len = 0;
  for (std::size_t i = 0; i < seg.size(); ++i) {
    const Segment& s = ann.segments[i];
    if (s.role == SegmentRole::kStem) prefix_len = to_u32(out).size();
    if (s.role == SegmentRole::kProclitic) {
      if (s.morpheme == "ل" && i + 1 < seg.size() &&
          ann.segments[i + 1].role == SegmentRole::kProclitic &&
          ann.segments[i + 1].morpheme == "ل") {
        out += "lil-";
        ++i;
        continue;
      }
      out += apply_rules(canonicalize_for_rules(to_u32(s.morpheme)), table, diag);
      out += '-';
    } else if (s.role == SegmentRole::kStem) {
      std::u32string bare;
      for (char32_t c : seg[i]) {
        if (!is_arabic_diacritic(c)) bare.push_back(c);
      }
      if (const std::string* value = table.exception(to_utf8(bare))) {
        out += *value;
      } else {
        out += apply_rules(canonicalize_for_rules(seg[i]), table, diag);
      }
    } else {
      out += apply_rules(canonicalize_for_rules(seg[i]), table, diag);
    }
  }

  // (6) capitalization on the first non-clitic letter.
  if (ann.is_proper_noun || ann.gloss_capitalized) {
    out = capitalize_from(out, prefix_len);
  }
  return {nfc(out), Provenance::kMorphTrans};
}

std::optional<RomanToken> MorphTransTechnique::romanize(const Entry& entry,
                                                        std::size_t index,
                                                        Diagnostics* diag) const {
  const ArabicToken& token = entry.tokens[index];
  if (token.kind != TokenKind::kWord) {
    return RomanToken{romanize_neutral(token.written()), Provenance::kMorphTrans};
  }
  const AnnotationContext context{entry.id, entry.tokens, index};
  auto ann = annotate(token, context, adapter_);
  if (!ann) return std::nullopt;
  return morphtrans_word(token, *ann, table_, diag);
}

std::vector<RomanToken> romanize_entry_morph(const Entry& entry,
                                             const AnalyzerAdapter& adapter,
                                             const RuleTable& table,
                                             Diagnostics* diag) {
  const MorphTransTechnique morph(adapter, table);
  const CharTransTechnique chartrans(table);
  const std::array<const Technique*, 2> chain = {&morph, &chartrans};
  return romanize_entry_backoff(entry, chain, {}, diag);
}

}  // namespace alalc
