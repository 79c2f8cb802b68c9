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
#ifndef ALALC_MARC_H_
#define ALALC_MARC_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "alalc/script.h"

namespace alalc {

struct MarcStats {
  std::size_t records_seen = 0;
  std::size_t records_without_008 = 0;
  std::size_t fields_880 = 0;
  std::size_t unlinked_880 = 0;
  std::size_t entries = 0;

  void merge(const MarcStats& other);
};

using RecordSink = std::function<void(BibRecord&&)>;

// Streams MARC-XML, emitting one BibRecord per <record> that carries an 008
// control field. Entries pair each linked 880 field (Arabic script) with its
// Romanized partner.
void parse_marc(std::istream& in, const std::string& source,
                const RecordSink& sink, MarcStats* stats = nullptr);
std::vector<BibRecord> parse_marc(std::istream& in, const std::string& source,
                                  MarcStats* stats = nullptr);
std::vector<BibRecord> parse_marc(std::string_view xml,
                                  const std::string& source = "<memory>",
                                  MarcStats* stats = nullptr);
std::vector<BibRecord> parse_marc_file(const std::filesystem::path& path,
                                       MarcStats* stats = nullptr);

std::vector<BibRecord> select_language(std::vector<BibRecord> records,
                                       std::string_view code = "ara");

}  // namespace alalc

#endif  // ALALC_MARC_H_
