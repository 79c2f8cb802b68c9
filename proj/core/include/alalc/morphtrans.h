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
#ifndef ALALC_MORPHTRANS_H_
#define ALALC_MORPHTRANS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alalc/diagnostics.h"
#include "alalc/rule_table.h"
#include "alalc/script.h"
#include "alalc/technique.h"

namespace alalc {

enum class SegmentRole { kProclitic, kStem, kEnclitic };

struct Segment {
  std::string morpheme;  // undiacritized
  SegmentRole role = SegmentRole::kStem;

  bool operator==(const Segment&) const = default;
};

struct MorphAnnotation {
  std::string diacritized;
  std::vector<Segment> segments;
  std::string pos;
  bool gloss_capitalized = false;
  bool is_proper_noun = false;
  // Ta marbuta realized as t.
  bool construct = false;

  bool operator==(const MorphAnnotation&) const = default;
};

// Checks that the segments spell `surface` and that there is exactly one
// stem, with proclitics before it and enclitics after it.
bool is_valid_annotation(const MorphAnnotation& ann, std::string_view surface);

// POS column grammar: TAG[|flag...]. TAG "noun_prop" or flag "prop" marks a
// proper noun; flag "construct" marks construct state.
void apply_pos_field(std::string_view pos, MorphAnnotation& ann);

// Segmentation column grammar: space separated morphemes, proclitics written
// "X+", enclitics "+X", the stem bare.
std::vector<Segment> parse_segmentation(std::string_view text);
std::string format_segmentation(std::span<const Segment> segments);

struct AnnotationContext {
  std::string_view entry_id;
  std::span<const ArabicToken> tokens;
  std::size_t index = 0;
};

enum class AnnotationSource { kAnnotationFile, kNaiveBuiltin };

class AnalyzerAdapter {
 public:
  virtual ~AnalyzerAdapter() = default;
  virtual AnnotationSource source() const = 0;
  // nullopt is the Unknown marker.
  virtual std::optional<MorphAnnotation> annotate(
      const AnnotationContext& context) const = 0;
};

// Offline disambiguator output, one TAB separated record per token:
//   entry_id  token_index  diacritized  segmentation  pos  gloss_caps(0|1)
class AnnotationFileAdapter : public AnalyzerAdapter {
 public:
  static AnnotationFileAdapter Load(const std::filesystem::path& path);
  static AnnotationFileAdapter Parse(std::string_view text,
                                     const std::string& source = "<memory>");

  AnnotationSource source() const override {
    return AnnotationSource::kAnnotationFile;
  }
  std::optional<MorphAnnotation> annotate(
      const AnnotationContext& context) const override;
  std::size_t size() const { return records_.size(); }

 private:
  std::map<std::pair<std::string, std::size_t>, MorphAnnotation> records_;
};

// Greedy longest-first proclitic stripping (و ف, then ب ل ك, then ال) with
// a lexicon lookup after every step. A Ta-Marbuta noun directly followed by
// a definite noun or a gazetteer name is taken to be in construct state.
class NaiveAnalyzer : public AnalyzerAdapter {
 public:
  struct LexEntry {
    std::string diacritized;
    std::string pos;
  };

  NaiveAnalyzer() = default;
  // Plain word lists of diacritized forms, one per line. Lexicon lines may
  // carry a POS after a TAB.
  static NaiveAnalyzer Load(const std::filesystem::path& lexicon,
                            const std::filesystem::path& gazetteer);
  void add_word(std::string_view diacritized, std::string_view pos = "noun");
  void add_proper_noun(std::string_view diacritized);

  AnnotationSource source() const override {
    return AnnotationSource::kNaiveBuiltin;
  }
  std::optional<MorphAnnotation> annotate(
      const AnnotationContext& context) const override;

 private:
  const LexEntry* find(std::string_view bare) const;
  bool is_proper(std::string_view bare) const;

  std::unordered_map<std::string, LexEntry> lexicon_;
};

std::optional<MorphAnnotation> annotate(const ArabicToken& token,
                                        const AnnotationContext& context,
                                        const AnalyzerAdapter& adapter);

// Morphology-aware Romanization of one annotated word. Any inconsistency in
// the annotation falls back to chartrans_word and bumps
// diag->morph_backoffs.
RomanToken morphtrans_word(const ArabicToken& token, const MorphAnnotation& ann,
                           const RuleTable& table, Diagnostics* diag = nullptr);

class MorphTransTechnique : public Technique {
 public:
  MorphTransTechnique(const AnalyzerAdapter& adapter, const RuleTable& table)
      : adapter_(adapter), table_(table) {}

  std::string_view name() const override { return "morph"; }
  std::optional<RomanToken> romanize(const Entry& entry, std::size_t index,
                                     Diagnostics* diag) const override;

 private:
  const AnalyzerAdapter& adapter_;
  const RuleTable& table_;
};

// Rules Morph: chain [morph, char].
std::vector<RomanToken> romanize_entry_morph(const Entry& entry,
                                             const AnalyzerAdapter& adapter,
                                             const RuleTable& table,
                                             Diagnostics* diag = nullptr);

}  // namespace alalc

#endif  // ALALC_MORPHTRANS_H_
