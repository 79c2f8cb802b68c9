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
#ifndef ALALC_DIAGNOSTICS_H_
#define ALALC_DIAGNOSTICS_H_

#include <cstddef>
#include <map>

namespace alalc {

// Warning channel shared by the Romanization techniques. Not thread-safe:
// give each worker its own instance and merge() at the end.
struct Diagnostics {
  // Codepoints no rule matched, copied through to the output.
  std::map<char32_t, std::size_t> unmapped;
  // morphtrans_word calls that fell back to chartrans_word.
  std::size_t morph_backoffs = 0;

  std::size_t unmapped_total() const {
    std::size_t n = 0;
    for (const auto& [c, count] : unmapped) n += count;
    return n;
  }

  void merge(const Diagnostics& other) {
    for (const auto& [c, count] : other.unmapped) unmapped[c] += count;
    morph_backoffs += other.morph_backoffs;
  }
};

}  // namespace alalc

#endif  // ALALC_DIAGNOSTICS_H_
