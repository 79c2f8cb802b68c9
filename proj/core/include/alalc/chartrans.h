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
#ifndef ALALC_CHARTRANS_H_
#define ALALC_CHARTRANS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alalc/diagnostics.h"
#include "alalc/rule_table.h"
#include "alalc/script.h"
#include "alalc/technique.h"

namespace alalc {

// Canonical form the rule cascade runs on: NFC, then within every run of
// combining marks shadda is moved directly after its base letter, and the
// assimilation shadda on a sun letter following the definite article is
// dropped (ALA-LC writes al- uniformly).
std::u32string canonicalize_for_rules(std::u32string_view text);

// Runs the rule cascade over a canonical string, no exception lookup.
// Codepoints no rule matches are copied through and counted in `diag`.
std::string apply_rules(std::u32string_view canonical, const RuleTable& table,
                        Diagnostics* diag = nullptr);

// Character transliteration of one token. Exceptions are looked up on the
// undiacritized surface; the rules see the written (possibly diacritized)
// form. Non-word tokens are script-converted with romanize_neutral().
RomanToken chartrans_word(const ArabicToken& token, const RuleTable& table,
                          Diagnostics* diag = nullptr);

// Uppercases the first cased letter of a Roman string, starting after
// `skip` codepoints.
std::string capitalize_from(std::string_view text, std::size_t skip = 0);

// Uppercases the first cased letter of the first word token, skipping
// leading punctuation/number tokens and leading clitic segments such as
// "al-" or "wa-al-".
std::vector<RomanToken> capitalize_entry_initial(std::vector<RomanToken> tokens);

class CharTransTechnique : public Technique {
 public:
  explicit CharTransTechnique(const RuleTable& table) : table_(table) {}

  std::string_view name() const override { return "char"; }
  bool total() const override { return true; }
  std::optional<RomanToken> romanize(const Entry& entry, std::size_t index,
                                     Diagnostics* diag) const override {
    return chartrans_word(entry.tokens[index], table_, diag);
  }

 private:
  const RuleTable& table_;
};

// Rules Simple: chartrans_word per token, then entry-initial capitalization.
std::vector<RomanToken> romanize_entry_char(const Entry& entry,
                                            const RuleTable& table,
                                            Diagnostics* diag = nullptr);

}  // namespace alalc

#endif  // ALALC_CHARTRANS_H_
