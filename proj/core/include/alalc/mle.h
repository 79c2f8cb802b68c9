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
#ifndef ALALC_MLE_H_
#define ALALC_MLE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alalc/script.h"
#include "alalc/technique.h"

namespace alalc {

// Unnormalized romanization counts per Arabic surface. Shards merge by
// summation; the source fraction (1/denominator of the full training split)
// must agree.
class MleCounts {
 public:
  explicit MleCounts(std::uint32_t fraction_denominator = 1)
      : denominator_(fraction_denominator) {}

  void add(const std::string& key, const std::string& romanization,
           std::size_t count = 1);
  // Counts the aligned token pairs of one entry; throws ValidationError on
  // a length mismatch.
  void add_entry(const Entry& entry);
  void merge(const MleCounts& other);

  std::size_t trained_words() const { return trained_words_; }
  std::uint32_t fraction_denominator() const { return denominator_; }
  const std::map<std::string, std::map<std::string, std::size_t>>& table() const {
    return table_;
  }

 private:
  std::map<std::string, std::map<std::string, std::size_t>> table_;
  std::size_t trained_words_ = 0;
  std::uint32_t denominator_;
};

class MleModel {
 public:
  using Candidates = std::vector<std::pair<std::string, std::size_t>>;

  MleModel() = default;
  explicit MleModel(const MleCounts& counts);

  static MleModel Parse(std::string_view text, const std::string& source = "<memory>");
  static MleModel Load(const std::filesystem::path& path);
  void Save(const std::filesystem::path& path) const;
  void Write(std::ostream& out) const;
  std::string Serialize() const;

  // Head of the candidate list, or nullptr for an unseen key.
  const std::string* lookup(std::string_view key) const;
  const Candidates* candidates(std::string_view key) const;

  std::size_t size() const { return table_.size(); }
  std::size_t trained_words() const { return trained_words_; }
  std::uint32_t fraction_denominator() const { return denominator_; }
  const std::map<std::string, Candidates, std::less<>>& table() const {
    return table_;
  }

  bool operator==(const MleModel&) const = default;

 private:
  std::map<std::string, Candidates, std::less<>> table_;
  std::size_t trained_words_ = 0;
  std::uint32_t denominator_ = 1;
};

MleModel train_mle(std::span<const Entry> entries,
                   std::uint32_t fraction_denominator = 1);

// Punctuation and numbers never reach the table.
std::optional<std::string> lookup(const MleModel& model, const ArabicToken& token);

class MleTechnique : public Technique {
 public:
  explicit MleTechnique(const MleModel& model) : model_(model) {}

  std::string_view name() const override { return "mle"; }
  std::optional<RomanToken> romanize(const Entry& entry, std::size_t index,
                                     Diagnostics* diag) const override;

 private:
  const MleModel& model_;
};

}  // namespace alalc

#endif  // ALALC_MLE_H_
