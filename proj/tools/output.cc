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
#include "output.h"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <memory>

#include "alalc/error.h"
#include "version.h"

namespace alalc::cli {

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                               EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw Error("internal", "SHA-256 unavailable");
  }
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) {
      EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
    }
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest;
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &len);
  std::string hex;
  char byte[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", digest[i]);
    hex += byte;
  }
  return hex;
}

AtomicOutput::AtomicOutput(std::filesystem::path path)
    : path_(std::move(path)), tmp_(path_.string() + ".tmp") {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  out_.open(tmp_, std::ios::binary | std::ios::trunc);
  if (!out_) throw IoError("cannot write " + tmp_.string());
}

AtomicOutput::~AtomicOutput() {
  if (committed_) return;
  out_.close();
  std::error_code ec;
  std::filesystem::remove(tmp_, ec);
}

void AtomicOutput::commit() {
  out_.flush();
  if (!out_) throw IoError("error writing " + tmp_.string());
  out_.close();
  std::filesystem::rename(tmp_, path_);
  committed_ = true;
}

Manifest::Manifest(std::string command, nlohmann::ordered_json config) {
  doc_["tool"] = "alalc";
  doc_["version"] = kVersion;
  doc_["command"] = std::move(command);
  doc_["config"] = std::move(config);
  doc_["inputs"] = nlohmann::ordered_json::array();
}

void Manifest::add_input(const std::filesystem::path& path) {
  doc_["inputs"].push_back({{"path", path.string()}, {"sha256", sha256_file(path)}});
}

void Manifest::set(const std::string& key, nlohmann::ordered_json value) {
  doc_[key] = std::move(value);
}

void Manifest::write_for(const std::filesystem::path& artifact) const {
  AtomicOutput out(artifact.string() + ".manifest.json");
  out.stream() << doc_.dump(2) << '\n';
  out.commit();
}

}  // namespace alalc::cli
