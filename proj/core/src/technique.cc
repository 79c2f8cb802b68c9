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
#include "alalc/technique.h"

#include "alalc/chartrans.h"
#include "alalc/error.h"

namespace alalc {

std::vector<RomanToken> romanize_entry_backoff(
    const Entry& entry, std::span<const Technique* const> chain,
    const BackoffOptions& options, Diagnostics* diag) {
  if (chain.empty()) throw ValidationError("backoff chain is empty");
  if (!chain.back()->total()) {
    throw ValidationError("backoff chain must end with a total technique, not '" +
                          std::string(chain.back()->name()) + "'");
  }
  std::vector<RomanToken> out;
  out.reserve(entry.tokens.size());
  for (std::size_t i = 0; i < entry.tokens.size(); ++i) {
    for (const Technique* technique : chain) {
      if (auto token = technique->romanize(entry, i, diag)) {
        out.push_back(std::move(*token));
        break;
      }
    }
  }
  if (options.entry_initial_caps) return capitalize_entry_initial(std::move(out));
  return out;
}

}  // namespace alalc
