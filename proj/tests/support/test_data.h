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
#ifndef ALALC_TESTS_SUPPORT_TEST_DATA_H_
#define ALALC_TESTS_SUPPORT_TEST_DATA_H_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "alalc/rule_table.h"

namespace alalc::testing {

inline std::filesystem::path data_path(const std::string& relative) {
  return std::filesystem::path(ALALC_TEST_DATA_DIR) / relative;
}

inline const RuleTable& default_table() {
  static const RuleTable table = load_rule_table(data_path("rules/alalc_arabic.rules"));
  return table;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Fresh scratch directory under the system temp dir, removed on scope exit.
class TempDir {
 public:
  explicit TempDir(const std::string& name)
      : path_(std::filesystem::temp_directory_path() / ("alalc-test-" + name)) {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace alalc::testing

#endif  // ALALC_TESTS_SUPPORT_TEST_DATA_H_
