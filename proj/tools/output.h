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
#ifndef ALALC_TOOLS_OUTPUT_H_
#define ALALC_TOOLS_OUTPUT_H_

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace alalc::cli {

std::string sha256_file(const std::filesystem::path& path);

// Writes to "<path>.tmp" and renames on commit(); an uncommitted file is
// removed on destruction.
class AtomicOutput {
 public:
  explicit AtomicOutput(std::filesystem::path path);
  ~AtomicOutput();
  AtomicOutput(const AtomicOutput&) = delete;
  AtomicOutput& operator=(const AtomicOutput&) = delete;

  std::ostream& stream() { return out_; }
  const std::filesystem::path& path() const { return path_; }
  void commit();

 private:
  std::filesystem::path path_;
  std::filesystem::path tmp_;
  std::ofstream out_;
  bool committed_ = false;
};

// Every artifact gets "<artifact>.manifest.json" with the command, its
// effective options, input checksums and versions. No timestamps, so
// reruns are byte-identical.
class Manifest {
 public:
  Manifest(std::string command, nlohmann::ordered_json config);

  void add_input(const std::filesystem::path& path);
  void set(const std::string& key, nlohmann::ordered_json value);
  void write_for(const std::filesystem::path& artifact) const;

 private:
  nlohmann::ordered_json doc_;
};

}  // namespace alalc::cli

#endif  // ALALC_TOOLS_OUTPUT_H_
