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
#include "alalc/mle.h"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "alalc/error.h"

namespace alalc {
namespace {

constexpr std::string_view kMagic = "# alalc-mle-model v1";

bool uses_table(TokenKind kind) {
  return kind == TokenKind::kWord || kind == TokenKind::kOther;
}

std::size_t parse_count(std::string_view text, const std::string& source,
                        std::size_t line) {
  std::size_t value = 0;
  if (text.empty()) throw ParseError(source, line, "empty count");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ParseError(source, line, "bad count '" + std::string(text) + "'");
    }
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

}  // namespace

void MleCounts::add(const std::string& key, const std::string& romanization,
                    std::size_t count) {
  if (count == 0) return;
  table_[key][romanization] += count;
}

void MleCounts::add_entry(const Entry& entry) {
  if (!entry.romanized) {
    throw ValidationError("entry " + entry.id + " has no reference romanization");
  }
  const std::vector<RomanToken>& roman = *entry.romanized;
  if (roman.size() != entry.tokens.size()) {
    throw ValidationError("entry " + entry.id + " has " +
                          std::to_string(entry.tokens.size()) + " Arabic and " +
                          std::to_string(roman.size()) + " Roman tokens");
  }
  for (std::size_t i = 0; i < roman.size(); ++i) {
    ++trained_words_;
    if (uses_table(entry.tokens[i].kind)) add(entry.tokens[i].surface, roman[i].text);
  }
}

void MleCounts::merge(const MleCounts& other) {
  if (other.denominator_ != denominator_) {
    throw ValidationError("cannot merge MLE counts for fractions 1/" +
                          std::to_string(denominator_) + " and 1/" +
                          std::to_string(other.denominator_));
  }
  for (const auto& [key, values] : other.table_) {
    for (const auto& [roman, count] : values) table_[key][roman] += count;
  }
  trained_words_ += other.trained_words_;
}

MleModel::MleModel(const MleCounts& counts)
    : trained_words_(counts.trained_words()),
      denominator_(counts.fraction_denominator()) {
  for (const auto& [key, values] : counts.table()) {
    Candidates list(values.begin(), values.end());
    std::stable_sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      return a.second > b.second;
    });
    table_.emplace(key, std::move(list));
  }
}

const MleModel::Candidates* MleModel::candidates(std::string_view key) const {
  auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

const std::string* MleModel::lookup(std::string_view key) const {
  const Candidates* list = candidates(key);
  return list == nullptr ? nullptr : &list->front().first;
}

void MleModel::Write(std::ostream& out) const {
  out << kMagic << '\n'
      << "# trained_words " << trained_words_ << '\n'
      << "# source_fraction 1/" << denominator_ << '\n';
  for (const auto& [key, list] : table_) {
    for (const auto& [roman, count] : list) {
      out << key << '\t' << roman << '\t' << count << '\n';
    }
  }
}

std::string MleModel::Serialize() const {
  std::ostringstream out;
  Write(out);
  return out.str();
}

void MleModel::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  Write(out);
  if (!out) throw IoError("error writing " + path.string());
}

MleModel MleModel::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str(), path.string());
}

MleModel MleModel::Parse(std::string_view text, const std::string& source) {
  MleCounts counts;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t trained = 0;
  std::uint32_t denominator = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line != kMagic) {
      throw ParseError(source, line_no, "not an MLE model file");
    }
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream header(line.substr(1));
      std::string name;
      std::string value;
      header >> name >> value;
      if (name == "trained_words") {
        trained = parse_count(value, source, line_no);
      } else if (name == "source_fraction") {
        if (!value.starts_with("1/")) {
          throw ParseError(source, line_no, "bad source fraction '" + value + "'");
        }
        denominator = static_cast<std::uint32_t>(
            parse_count(std::string_view(value).substr(2), source, line_no));
        if (denominator == 0) throw ParseError(source, line_no, "zero denominator");
      }
      continue;
    }
    const std::size_t a = line.find('\t');
    const std::size_t b = a == std::string::npos ? a : line.find('\t', a + 1);
    if (b == std::string::npos || line.find('\t', b + 1) != std::string::npos) {
      throw ParseError(source, line_no, "expected KEY<TAB>ROMANIZATION<TAB>COUNT");
    }
    const std::size_t count =
        parse_count(std::string_view(line).substr(b + 1), source, line_no);
    if (count == 0) throw ParseError(source, line_no, "count must be positive");
    counts.add(line.substr(0, a), line.substr(a + 1, b - a - 1), count);
  }
  if (line_no == 0) throw ParseError(source, 1, "not an MLE model file");
  MleModel model(counts);
  model.trained_words_ = trained;
  model.denominator_ = denominator;
  return model;
}

MleModel train_mle(std::span<const Entry> entries,
                   std::uint32_t fraction_denominator) {
  MleCounts counts(fraction_denominator);
  for (const Entry& entry : entries) counts.add_entry(entry);
  return MleModel(counts);
}

std::optional<std::string> lookup(const MleModel& model, const ArabicToken& token) {
  if (!uses_table(token.kind)) return romanize_neutral(token.written());
  if (const std::string* value = model.lookup(token.surface)) return *value;
  return std::nullopt;
}

std::optional<RomanToken> MleTechnique::romanize(const Entry& entry,
                                                 std::size_t index,
                                                 Diagnostics*) const {
  auto value = lookup(model_, entry.tokens[index]);
  if (!value) return std::nullopt;
  return RomanToken{std::move(*value), Provenance::kMle};
}

}  // namespace alalc
