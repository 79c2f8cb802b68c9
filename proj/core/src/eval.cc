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
#include "alalc/eval.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <utility>

#include "alalc/combiner.h"
#include "alalc/corpus.h"
#include "alalc/error.h"
#include "alalc/unicode.h"

namespace alalc {
namespace {

bool is_vowel(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case U'ā': case U'ī': case U'ū': case U'á':
      return true;
    default:
      return false;
  }
}

std::u32string consonant_skeleton(std::string_view text, bool long_as_glide) {
  std::u32string out;
  for (char32_t c : case_fold(to_u32(nfc(text)))) {
    // Long ī and ū are written with the same letters as consonantal y and w.
    if (long_as_glide && c == U'ī') c = U'y';
    if (long_as_glide && c == U'ū') c = U'w';
    if (!is_letter(c) || is_vowel(c)) continue;
    if (!out.empty() && out.back() == c) continue;
    out.push_back(c);
  }
  return out;
}

// Latin letters an Arabic consonant may contribute under ALA-LC.
std::u32string_view latin_support(char32_t c) {
  switch (c) {
    case U'ء': case U'أ': case U'إ': case U'ؤ': case U'ئ': case U'آ':
      return U"ʼ";
    case U'ب': return U"b";
    case U'ت': return U"tʹ";
    case U'ث': return U"th";
    case U'ج': return U"j";
    case U'ح': return U"ḥ";
    case U'خ': return U"kh";
    case U'د': return U"dʹ";
    case U'ذ': return U"dh";
    case U'ر': return U"r";
    case U'ز': return U"z";
    case U'س': return U"sʹ";
    case U'ش': return U"sh";
    case U'ص': return U"ṣ";
    case U'ض': return U"ḍ";
    case U'ط': return U"ṭ";
    case U'ظ': return U"ẓ";
    case U'ع': return U"ʻ";
    case U'غ': return U"gh";
    case U'ف': return U"f";
    case U'ق': return U"q";
    case U'ك': return U"kʹ";
    case U'ل': return U"l";
    case U'م': return U"m";
    case U'ن': return U"n";
    case U'ه': return U"h";
    case U'و': return U"w";
    case U'ي': return U"y";
    case U'ة': return U"ht";
    default: return U"";
  }
}

}  // namespace

std::string Matcher::cpi_key(std::string_view text) const {
  std::string folded = case_fold(nfc(text));
  std::u32string kept;
  bool pending = false;
  for (char32_t c : to_u32(folded)) {
    if (punct_.contains(c)) continue;
    if (is_whitespace(c)) {
      pending = !kept.empty();
      continue;
    }
    if (pending) kept.push_back(U' ');
    pending = false;
    kept.push_back(c);
  }
  return to_utf8(kept);
}

MatchOutcome Matcher::compare(std::string_view pred, std::string_view ref) const {
  const std::string p = nfc(pred);
  const std::string r = nfc(ref);
  MatchOutcome m;
  m.exact = p == r;
  m.ci = m.exact || case_fold(p) == case_fold(r);
  m.cpi = m.ci || cpi_key(p) == cpi_key(r);
  return m;
}

void Tally::add(const MatchOutcome& m) {
  ++total;
  exact += m.exact ? 1 : 0;
  ci += m.ci ? 1 : 0;
  cpi += m.cpi ? 1 : 0;
}

void Tally::merge(const Tally& other) {
  total += other.total;
  exact += other.exact;
  ci += other.ci;
  cpi += other.cpi;
}

double percent(std::size_t matches, std::size_t total) {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(matches) / static_cast<double>(total);
}

std::string format_percent(std::size_t matches, std::size_t total) {
  // Integer rounding (half up) so the printed digit never depends on
  // floating-point formatting.
  if (total == 0) return "0.0";
  const std::size_t tenths = (matches * 2000 + total) / (2 * total);
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

void EvalReport::merge(const EvalReport& other) {
  all.merge(other.all);
  words.merge(other.words);
  for (const auto& [p, t] : other.per_provenance) per_provenance[p].merge(t);
  entries += other.entries;
  aligned_entries += other.aligned_entries;
  missing_entries += other.missing_entries;
}

std::string EvalReport::format_table(std::string_view title) const {
  std::ostringstream out;
  if (!title.empty()) out << title << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %9s %7s %7s %7s\n", "scope", "tokens", "Exact",
                "CI", "CPI");
  out << line;
  auto row = [&](const std::string& name, const Tally& t) {
    std::snprintf(line, sizeof line, "%-16s %9zu %7s %7s %7s\n", name.c_str(), t.total,
                  format_percent(t.exact, t.total).c_str(),
                  format_percent(t.ci, t.total).c_str(),
                  format_percent(t.cpi, t.total).c_str());
    out << line;
  };
  row("all", all);
  row("words", words);
  for (const auto& [p, t] : per_provenance) row(std::string(to_string(p)), t);
  return out.str();
}

std::string EvalReport::format_kv(std::string_view prefix) const {
  std::ostringstream out;
  const std::string pre(prefix);
  auto emit = [&](const std::string& scope, const Tally& t) {
    out << pre << scope << ".total=" << t.total << '\n';
    out << pre << scope << ".exact=" << t.exact << '\n';
    out << pre << scope << ".ci=" << t.ci << '\n';
    out << pre << scope << ".cpi=" << t.cpi << '\n';
    out << pre << scope << ".exact_pct=" << format_percent(t.exact, t.total) << '\n';
    out << pre << scope << ".ci_pct=" << format_percent(t.ci, t.total) << '\n';
    out << pre << scope << ".cpi_pct=" << format_percent(t.cpi, t.total) << '\n';
  };
  out << pre << "entries=" << entries << '\n';
  out << pre << "aligned_entries=" << aligned_entries << '\n';
  out << pre << "missing_entries=" << missing_entries << '\n';
  emit("all", all);
  emit("words", words);
  for (const auto& [p, t] : per_provenance) emit("provenance." + std::string(to_string(p)), t);
  return out.str();
}

EvalReport word_accuracy(std::span<const RomanToken> pred,
                         std::span<const RomanToken> ref, const Matcher& matcher,
                         std::string_view entry_id) {
  if (pred.size() != ref.size()) {
    throw StructuralError("entry " + std::string(entry_id.empty() ? "?" : entry_id) +
                          ": " + std::to_string(pred.size()) + " predicted tokens for " +
                          std::to_string(ref.size()) + " reference tokens");
  }
  EvalReport report;
  report.entries = 1;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const MatchOutcome m = matcher.compare(pred[i].text, ref[i].text);
    report.all.add(m);
    if (count_words(ref.subspan(i, 1)) == 1) report.words.add(m);
    report.per_provenance[pred[i].provenance].add(m);
  }
  return report;
}

EvalReport evaluate(std::span<const Entry> references,
                    const std::map<std::string, std::vector<RomanToken>>& predictions,
                    const Matcher& matcher, const EvalOptions& options) {
  EvalReport report;
  for (const Entry& entry : references) {
    if (!entry.romanized) {
      throw ValidationError("reference entry " + entry.id + " has no Roman side");
    }
    const std::vector<RomanToken>& ref = *entry.romanized;
    auto it = predictions.find(entry.id);
    if (it == predictions.end()) {
      if (!options.lenient) throw StructuralError("no prediction for entry " + entry.id);
      std::vector<RomanToken> empty(ref.size(), RomanToken{"", Provenance::kGapFill});
      EvalReport r = word_accuracy(empty, ref, matcher, entry.id);
      r.missing_entries = 1;
      report.merge(r);
      continue;
    }
    if (it->second.size() == ref.size() || !options.lenient) {
      report.merge(word_accuracy(it->second, ref, matcher, entry.id));
      continue;
    }
    const std::vector<RomanToken> aligned =
        combine(it->second, ref, AlignOptions{});
    std::vector<RomanToken> scored = aligned;
    for (RomanToken& t : scored) {
      if (t.provenance == Provenance::kGapFill) t.text.clear();
    }
    EvalReport r = word_accuracy(scored, ref, matcher, entry.id);
    r.aligned_entries = 1;
    report.merge(r);
  }
  return report;
}

bool is_permitted(ErrorSide side, ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kRomanization:
      return true;
    case ErrorKind::kAlignment:
    case ErrorKind::kSource:
    case ErrorKind::kTranslation:
      return side == ErrorSide::kGold;
    case ErrorKind::kHallucination:
    case ErrorKind::kValidVariant:
      return side == ErrorSide::kSystem;
  }
  return false;
}

ErrorCategory make_category(ErrorSide side, ErrorKind kind) {
  if (!is_permitted(side, kind)) {
    throw ValidationError(std::string(to_string(kind)) + " is not a " +
                          std::string(to_string(side)) + " error type");
  }
  return {side, kind};
}

std::string_view to_string(ErrorSide side) {
  return side == ErrorSide::kGold ? "gold" : "system";
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kRomanization: return "romanization";
    case ErrorKind::kAlignment: return "alignment";
    case ErrorKind::kSource: return "source";
    case ErrorKind::kTranslation: return "translation";
    case ErrorKind::kHallucination: return "hallucination";
    case ErrorKind::kValidVariant: return "valid_variant";
  }
  return "?";
}

std::optional<ErrorSide> parse_error_side(std::string_view name) {
  if (name == "gold") return ErrorSide::kGold;
  if (name == "system") return ErrorSide::kSystem;
  return std::nullopt;
}

std::optional<ErrorKind> parse_error_kind(std::string_view name) {
  for (ErrorKind k : {ErrorKind::kRomanization, ErrorKind::kAlignment, ErrorKind::kSource,
                      ErrorKind::kTranslation, ErrorKind::kHallucination,
                      ErrorKind::kValidVariant}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(SuggestedLabel label) {
  switch (label) {
    case SuggestedLabel::kRomanization: return "romanization";
    case SuggestedLabel::kHallucination: return "hallucination";
    case SuggestedLabel::kOther: return "other";
  }
  return "?";
}

SuggestedLabel suggest_label(std::string_view source, std::string_view pred,
                             std::string_view ref) {
  if (consonant_skeleton(pred, false) == consonant_skeleton(ref, false) ||
      consonant_skeleton(pred, true) == consonant_skeleton(ref, true)) {
    return SuggestedLabel::kRomanization;
  }
  std::u32string supported = U"ʹ";
  for (char32_t c : to_u32(strip_diacritics(nfc(source)))) {
    if (is_decimal_digit(c)) {
      supported += c;
      continue;
    }
    supported += latin_support(c);
  }
  for (char32_t c : case_fold(to_u32(nfc(pred)))) {
    if (!is_letter(c) || is_vowel(c)) continue;
    if (supported.find(c) == std::u32string::npos) return SuggestedLabel::kHallucination;
  }
  return SuggestedLabel::kOther;
}

std::vector<ErrorSample> sample_errors(
    std::span<const Entry> references,
    const std::map<std::string, std::vector<RomanToken>>& predictions,
    std::size_t n, std::uint64_t seed, const Matcher& matcher) {
  std::vector<ErrorSample> candidates;
  for (const Entry& entry : references) {
    if (!entry.romanized) continue;
    auto it = predictions.find(entry.id);
    if (it == predictions.end() || it->second.size() != entry.romanized->size()) continue;
    for (std::size_t i = 0; i < entry.tokens.size(); ++i) {
      const std::string& pred = it->second[i].text;
      const std::string& ref = (*entry.romanized)[i].text;
      if (matcher.compare(pred, ref).cpi) continue;
      ErrorSample s;
      s.entry_id = entry.id;
      s.token_index = i;
      s.source = entry.tokens[i].written();
      s.prediction = pred;
      s.target = ref;
      s.suggestion = suggest_label(s.source, pred, ref);
      candidates.push_back(std::move(s));
    }
  }
  const std::vector<std::size_t> order = seeded_permutation(candidates.size(), seed);
  std::vector<std::size_t> chosen(order.begin(),
                                  order.begin() + static_cast<std::ptrdiff_t>(
                                                      std::min(n, order.size())));
  std::sort(chosen.begin(), chosen.end());
  std::vector<ErrorSample> out;
  out.reserve(chosen.size());
  for (std::size_t i : chosen) out.push_back(std::move(candidates[i]));
  return out;
}

}  // namespace alalc
