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
#ifndef ALALC_EVAL_H_
#define ALALC_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alalc/script.h"

namespace alalc {

struct MatchOutcome {
  bool exact = false;
  bool ci = false;
  bool cpi = false;

  bool operator==(const MatchOutcome&) const = default;
};

class Matcher {
 public:
  explicit Matcher(PunctuationSet punct = PunctuationSet::Default())
      : punct_(std::move(punct)) {}

  MatchOutcome compare(std::string_view pred, std::string_view ref) const;
  // Case folded with punctuation removed; whitespace runs become one space.
  std::string cpi_key(std::string_view text) const;

 private:
  PunctuationSet punct_;
};

struct Tally {
  std::size_t total = 0;
  std::size_t exact = 0;
  std::size_t ci = 0;
  std::size_t cpi = 0;

  void add(const MatchOutcome& m);
  void merge(const Tally& other);
  bool operator==(const Tally&) const = default;
};

// One decimal place; "0.0" for an empty denominator.
std::string format_percent(std::size_t matches, std::size_t total);
double percent(std::size_t matches, std::size_t total);

struct EvalReport {
  Tally all;
  // Reference tokens containing at least one letter.
  Tally words;
  std::map<Provenance, Tally> per_provenance;
  std::size_t entries = 0;
  std::size_t aligned_entries = 0;  // lenient mode only
  std::size_t missing_entries = 0;

  void merge(const EvalReport& other);
  std::string format_table(std::string_view title = "") const;
  std::string format_kv(std::string_view prefix = "") const;
};

// Token-aligned scoring; throws StructuralError naming `entry_id` when the
// lengths differ.
EvalReport word_accuracy(std::span<const RomanToken> pred,
                         std::span<const RomanToken> ref,
                         const Matcher& matcher = Matcher(),
                         std::string_view entry_id = "");

struct EvalOptions {
  // Score length-mismatched or missing predictions by aligning them to the
  // reference instead of failing.
  bool lenient = false;
};

// Predictions keyed by entry id against references carried by the entries.
EvalReport evaluate(std::span<const Entry> references,
                    const std::map<std::string, std::vector<RomanToken>>& predictions,
                    const Matcher& matcher = Matcher(), const EvalOptions& options = {});

enum class ErrorSide { kGold, kSystem };
enum class ErrorKind {
  kRomanization,
  kAlignment,
  kSource,
  kTranslation,
  kHallucination,
  kValidVariant,
};

struct ErrorCategory {
  ErrorSide side = ErrorSide::kSystem;
  ErrorKind kind = ErrorKind::kRomanization;

  bool operator==(const ErrorCategory&) const = default;
};

bool is_permitted(ErrorSide side, ErrorKind kind);
// Throws ValidationError for a combination outside the taxonomy.
ErrorCategory make_category(ErrorSide side, ErrorKind kind);
std::string_view to_string(ErrorSide side);
std::string_view to_string(ErrorKind kind);
std::optional<ErrorSide> parse_error_side(std::string_view name);
std::optional<ErrorKind> parse_error_kind(std::string_view name);

enum class SuggestedLabel { kRomanization, kHallucination, kOther };
std::string_view to_string(SuggestedLabel label);

SuggestedLabel suggest_label(std::string_view source, std::string_view pred,
                             std::string_view ref);

struct ErrorSample {
  std::string entry_id;
  std::size_t token_index = 0;
  std::string source;
  std::string prediction;
  std::string target;
  SuggestedLabel suggestion = SuggestedLabel::kOther;
  std::optional<ErrorCategory> human_label;
};

// Seeded uniform sample (without replacement) of CPI-mismatching tokens, in
// corpus order.
std::vector<ErrorSample> sample_errors(
    std::span<const Entry> references,
    const std::map<std::string, std::vector<RomanToken>>& predictions,
    std::size_t n, std::uint64_t seed, const Matcher& matcher = Matcher());

}  // namespace alalc

#endif  // ALALC_EVAL_H_
