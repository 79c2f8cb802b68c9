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
#ifndef ALALC_COMBINER_H_
#define ALALC_COMBINER_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "alalc/script.h"

namespace alalc {

struct AlignOptions {
  enum class GapCost { kTokenLength, kConstant };
  GapCost gap_cost = GapCost::kTokenLength;
  std::size_t constant_gap = 1;
  bool case_fold = true;
};

struct AlignmentResult {
  // (source index, hypothesis index) in source order.
  std::vector<std::pair<std::size_t, std::optional<std::size_t>>> pairs;
  std::size_t dropped_sources = 0;
  std::size_t extra_hypotheses = 0;
  std::size_t total_cost = 0;
};

std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

AlignmentResult align(std::span<const RomanToken> hyp,
                      std::span<const RomanToken> backoff,
                      const AlignOptions& options = {});

std::vector<RomanToken> combine(std::span<const RomanToken> hyp,
                                std::span<const RomanToken> backoff,
                                const AlignOptions& options = {});

// One line of a predictions file: entry id, Romanized line, and optionally
// the per-token provenance names.
struct Prediction {
  std::string entry_id;
  std::string line;
  std::optional<std::vector<Provenance>> provenances;
};

std::vector<Prediction> read_predictions(const std::filesystem::path& path);
std::vector<Prediction> parse_predictions(std::string_view text,
                                          const std::string& source = "<memory>");
std::string format_prediction(const std::string& entry_id,
                              std::span<const RomanToken> tokens,
                              const Layout& layout, bool with_provenance = true);

// Tokenized hypotheses keyed by entry id. Ids outside `known_ids` are
// rejected; entries absent from the file are simply missing from the map.
std::map<std::string, std::vector<RomanToken>> ingest_predictions(
    const std::filesystem::path& path,
    const std::unordered_set<std::string>& known_ids);
std::map<std::string, std::vector<RomanToken>> ingest_predictions(
    std::span<const Prediction> predictions,
    const std::unordered_set<std::string>& known_ids);

}  // namespace alalc

#endif  // ALALC_COMBINER_H_
