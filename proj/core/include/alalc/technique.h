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
#ifndef ALALC_TECHNIQUE_H_
#define ALALC_TECHNIQUE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "alalc/diagnostics.h"
#include "alalc/script.h"

namespace alalc {

// A Romanization technique usable as a link of a backoff chain. romanize()
// returns nullopt when the technique has no answer for the token.
class Technique {
 public:
  virtual ~Technique() = default;

  virtual std::string_view name() const = 0;
  // A total technique answers every token; a chain must end with one.
  virtual bool total() const { return false; }
  virtual std::optional<RomanToken> romanize(const Entry& entry,
                                             std::size_t index,
                                             Diagnostics* diag) const = 0;
};

struct BackoffOptions {
  // Apply capitalize_entry_initial once after the chain has run.
  bool entry_initial_caps = true;
};

// Per token, the first technique producing an answer wins.
// Throws ValidationError if the chain is empty or its last link is not total.
std::vector<RomanToken> romanize_entry_backoff(
    const Entry& entry, std::span<const Technique* const> chain,
    const BackoffOptions& options = {}, Diagnostics* diag = nullptr);

}  // namespace alalc

#endif  // ALALC_TECHNIQUE_H_
