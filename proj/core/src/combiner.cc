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
#include "alalc/combiner.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "alalc/error.h"
#include "alalc/unicode.h"

namespace alalc {
namespace {

// Lexicographic score: lower cost, then more exact matches, then lower edit
// distance inside matched pairs, then fewer gaps.
struct Score {
  std::size_t cost = 0;
  std::size_t exact = 0;
  std::size_t substitution = 0;
  std::size_t gaps = 0;

  bool operator<(const Score& o) const {
    return std::tie(cost, o.exact, substitution, gaps) <
           std::tie(o.cost, exact, o.substitution, o.gaps);
  }
};

enum class Move : unsigned char { kNone, kMatch, kSkipHyp, kDropSource };

std::u32string prepare(const RomanToken& token, const AlignOptions& options) {
  return options.case_fold ? case_fold(to_u32(token.text)) : to_u32(token.text);
}

}  // namespace

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

AlignmentResult align(std::span<const RomanToken> hyp,
                      std::span<const RomanToken> backoff,
                      const AlignOptions& options) {
  const std::size_t n = backoff.size();
  const std::size_t m = hyp.size();
  std::vector<std::u32string> b(n);
  std::vector<std::u32string> h(m);
  for (std::size_t i = 0; i < n; ++i) b[i] = prepare(backoff[i], options);
  for (std::size_t j = 0; j < m; ++j) h[j] = prepare(hyp[j], options);
  auto gap = [&](const std::u32string& s) {
    return options.gap_cost == AlignOptions::GapCost::kTokenLength
               ? s.size()
               : options.constant_gap;
  };

  // Suffix tables so that a forward walk takes the earliest match on ties.
  const std::size_t w = m + 1;
  std::vector<Score> best((n + 1) * w);
  std::vector<Move> move((n + 1) * w, Move::kNone);
  for (std::size_t i = n + 1; i-- > 0;) {
    for (std::size_t j = m + 1; j-- > 0;) {
      if (i == n && j == m) continue;
      Score s;
      Move mv = Move::kNone;
      auto consider = [&](Score candidate, Move candidate_move) {
        if (mv == Move::kNone || candidate < s) {
          s = candidate;
          mv = candidate_move;
        }
      };
      if (i < n && j < m) {
        Score c = best[(i + 1) * w + j + 1];
        const std::size_t d = levenshtein(h[j], b[i]);
        c.cost += d;
        c.substitution += d;
        if (d == 0) ++c.exact;
        consider(c, Move::kMatch);
      }
      if (j < m) {
        Score c = best[i * w + j + 1];
        c.cost += gap(h[j]);
        ++c.gaps;
        consider(c, Move::kSkipHyp);
      }
      if (i < n) {
        Score c = best[(i + 1) * w + j];
        c.cost += gap(b[i]);
        ++c.gaps;
        consider(c, Move::kDropSource);
      }
      best[i * w + j] = s;
      move[i * w + j] = mv;
    }
  }

  AlignmentResult result;
  result.total_cost = best[0].cost;
  result.pairs.reserve(n);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    switch (move[i * w + j]) {
      case Move::kMatch:
        result.pairs.emplace_back(i++, j++);
        break;
      case Move::kSkipHyp:
        ++result.extra_hypotheses;
        ++j;
        break;
      case Move::kDropSource:
        result.pairs.emplace_back(i++, std::nullopt);
        ++result.dropped_sources;
        break;
      case Move::kNone:
        throw StructuralError("alignment table is incomplete");
    }
  }
  return result;
}

std::vector<RomanToken> combine(std::span<const RomanToken> hyp,
                                std::span<const RomanToken> backoff,
                                const AlignOptions& options) {
  const AlignmentResult alignment = align(hyp, backoff, options);
  std::vector<RomanToken> out;
  out.reserve(backoff.size());
  for (const auto& [source, h] : alignment.pairs) {
    if (h) {
      out.push_back({hyp[*h].text, Provenance::kExternal});
    } else {
      out.push_back({backoff[source].text, Provenance::kGapFill});
    }
  }
  return out;
}

std::vector<Prediction> parse_predictions(std::string_view text,
                                          const std::string& source) {
  std::vector<Prediction> out;
  std::unordered_set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError(source, line_no, "expected ENTRY_ID<TAB>LINE");
    }
    Prediction p;
    p.entry_id = line.substr(0, tab);
    const std::size_t tab2 = line.find('\t', tab + 1);
    p.line = nfc(line.substr(tab + 1, tab2 == std::string::npos
                                          ? std::string::npos
                                          : tab2 - tab - 1));
    if (tab2 != std::string::npos) {
      std::vector<Provenance> provs;
      std::istringstream names(line.substr(tab2 + 1));
      std::string name;
      while (std::getline(names, name, ',')) {
        auto prov = parse_provenance(name);
        if (!prov) throw ParseError(source, line_no, "unknown provenance '" + name + "'");
        provs.push_back(*prov);
      }
      p.provenances = std::move(provs);
    }
    if (!seen.insert(p.entry_id).second) {
      throw ParseError(source, line_no, "duplicate entry id " + p.entry_id);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Prediction> read_predictions(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_predictions(buf.str(), path.string());
}

std::string format_prediction(const std::string& entry_id,
                              std::span<const RomanToken> tokens,
                              const Layout& layout, bool with_provenance) {
  std::string out = entry_id + '\t' + detokenize(tokens, layout);
  if (with_provenance) {
    out += '\t';
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i > 0) out += ',';
      out += to_string(tokens[i].provenance);
    }
  }
  return out;
}

std::map<std::string, std::vector<RomanToken>> ingest_predictions(
    std::span<const Prediction> predictions,
    const std::unordered_set<std::string>& known_ids) {
  std::map<std::string, std::vector<RomanToken>> out;
  for (const Prediction& p : predictions) {
    if (!known_ids.contains(p.entry_id)) {
      throw ValidationError("prediction for unknown entry " + p.entry_id);
    }
    out.emplace(p.entry_id, tokenize_roman(p.line, Provenance::kExternal));
  }
  return out;
}

std::map<std::string, std::vector<RomanToken>> ingest_predictions(
    const std::filesystem::path& path,
    const std::unordered_set<std::string>& known_ids) {
  return ingest_predictions(read_predictions(path), known_ids);
}

}  // namespace alalc
