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

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.h"
#include "doctest.h"
#include "test_data.h"

namespace alalc {
namespace {

namespace fs = std::filesystem;

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), {"--data-dir", testing::data_path("").string()});
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::map<std::string, std::string> key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

std::size_t line_count(const fs::path& path) {
  std::ifstream in(path);
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) ++n;
  return n;
}

std::string sample() { return testing::data_path("sample/marc_sample.xml").string(); }

// extract -> clean -> split into `dir` with the given job count.
void pipeline(const testing::TempDir& dir, const std::string& jobs) {
  REQUIRE(run({"-j", jobs, "extract", "--in", sample(), "--out", (dir / "ex.tsv").string()})
              .status == 0);
  REQUIRE(run({"clean", "-j", jobs, "--in", (dir / "ex.tsv").string(), "--out",
               (dir / "cl.tsv").string()})
              .status == 0);
  REQUIRE(run({"split", "--in", (dir / "cl.tsv").string(), "--out-dir",
               (dir / "split").string(), "--seed", "11", "--jobs", jobs})
              .status == 0);
}

TEST_CASE("version") {
  const Result r = run({"version"});
  CHECK(r.status == 0);
  CHECK(r.out.starts_with("alalc "));
  CHECK(r.out.find("table: alalc-arabic-2012.3") != std::string::npos);

  const Result j = run({"version", "--json"});
  REQUIRE(j.status == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["tool"] == "alalc");
  CHECK(doc["table"] == "alalc-arabic-2012.3");

  const Result none = run({"version", "--rules", "/nonexistent/table.rules"});
  CHECK(none.status == 0);
  CHECK(none.out.find("table: none") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
  const Result r = run({"extract"});
  CHECK(r.status == 2);
  CHECK(r.err.starts_with("error: code=usage"));
  CHECK(run({"no-such-command"}).status == 2);
  CHECK(run({"split", "--in", sample(), "--out-dir", "x", "--ratios", "8:1"}).status != 0);
}

TEST_CASE("help goes to stdout") {
  const Result r = run({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("romanize") != std::string::npos);
}

TEST_CASE("extract, clean and split write corpora with manifests") {
  const testing::TempDir dir("cli-pipeline");
  const Result ex = run({"extract", "--in", sample(), "--out", (dir / "ex.tsv").string()});
  REQUIRE(ex.status == 0);
  const auto kv = key_values(ex.out);
  CHECK(kv.at("records_seen") == "100");
  CHECK(kv.at("records_in_language") == "80");

  pipeline(dir, "1");
  for (const char* name : {"ex.tsv", "cl.tsv", "split/train.tsv", "split/dev.tsv", "split/test.tsv"}) {
    const fs::path manifest = dir / (std::string(name) + ".manifest.json");
    REQUIRE(fs::exists(manifest));
    const auto doc = nlohmann::json::parse(testing::slurp(manifest));
    CHECK(doc["tool"] == "alalc");
    REQUIRE(doc["inputs"].is_array());
    for (const auto& input : doc["inputs"]) CHECK(input["sha256"].get<std::string>().size() == 64);
  }
  const std::size_t total = line_count(dir / "split/train.tsv") +
                            line_count(dir / "split/dev.tsv") +
                            line_count(dir / "split/test.tsv");
  CHECK(total == line_count(dir / "cl.tsv"));
}

TEST_CASE("outputs do not depend on the job count") {
  const testing::TempDir one("cli-j1");
  const testing::TempDir four("cli-j4");
  pipeline(one, "1");
  pipeline(four, "4");
  for (const char* name : {"ex.tsv", "cl.tsv", "split/train.tsv", "split/dev.tsv", "split/test.tsv"}) {
    CHECK_MESSAGE(testing::slurp(one / name) == testing::slurp(four / name), name);
  }
}

TEST_CASE("romanize, evaluate and error-sample") {
  const testing::TempDir dir("cli-romanize");
  pipeline(dir, "2");
  const std::string dev = (dir / "split/dev.tsv").string();
  const std::string pred = (dir / "pred.tsv").string();
  REQUIRE(run({"romanize", "--in", dev, "--chain", "morph,char", "--out", pred}).status == 0);
  CHECK(line_count(pred) == line_count(dev));

  const Result ev = run({"evaluate", "--pred", pred, "--ref", dev, "--format", "kv"});
  REQUIRE(ev.status == 0);
  const auto kv = key_values(ev.out);
  const double exact = std::stod(kv.at("all.exact_pct"));
  const double ci = std::stod(kv.at("all.ci_pct"));
  const double cpi = std::stod(kv.at("all.cpi_pct"));
  CHECK(exact <= ci);
  CHECK(ci <= cpi);
  CHECK(exact > 50.0);

  const Result es = run({"error-sample", "--pred", pred, "--ref", dev, "-n", "5", "--seed", "2"});
  REQUIRE(es.status == 0);
  CHECK(es.out.starts_with("entry_id\ttoken\tsource\tprediction\ttarget"));
}

TEST_CASE("romanize requires a model for mle") {
  const testing::TempDir dir("cli-mle");
  pipeline(dir, "1");
  const Result r = run({"romanize", "--in", (dir / "split/dev.tsv").string(), "--chain",
                        "mle,char", "--out", (dir / "p.tsv").string()});
  CHECK(r.status != 0);
  CHECK(r.err.find("error: code=") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "p.tsv"));
}

TEST_CASE("train-mle, combine and ablate") {
  const testing::TempDir dir("cli-mle-train");
  pipeline(dir, "1");
  const std::string train = (dir / "split/train.tsv").string();
  const std::string dev = (dir / "split/dev.tsv").string();
  const std::string model = (dir / "model.tsv").string();
  REQUIRE(run({"train-mle", "--in", train, "--out", model, "-j", "3"}).status == 0);
  CHECK(testing::slurp(model).starts_with("# alalc-mle-model v1\n"));

  const std::string hyp = (dir / "hyp.tsv").string();
  REQUIRE(run({"romanize", "--in", dev, "--chain", "mle,char", "--model", model, "--out", hyp})
              .status == 0);
  const Result co = run({"combine", "--in", dev, "--hyp", hyp, "--out", (dir / "c.tsv").string()});
  REQUIRE(co.status == 0);
  CHECK(key_values(co.out).at("missing_entries") == "0");

  const Result ab = run({"ablate", "--train", train, "--dev", dev, "--seed", "5"});
  REQUIRE(ab.status == 0);
  std::istringstream rows(ab.out);
  std::string line;
  std::getline(rows, line);
  CHECK(line.starts_with("fraction\ttrain_words\texact"));
  std::size_t n = 0;
  while (std::getline(rows, line)) n += line.empty() ? 0 : 1;
  CHECK(n == 7);
}

TEST_CASE("a failing command leaves no partial output") {
  const testing::TempDir dir("cli-atomic");
  {
    std::ofstream bad(dir / "bad.xml");
    bad << "<collection><record><controlfield tag=\"008\">";
  }
  const Result r = run({"extract", "--in", sample(), "--in", (dir / "bad.xml").string(), "--out",
                        (dir / "out.tsv").string()});
  CHECK(r.status == 1);
  CHECK(r.err.starts_with("error: code=xml"));
  CHECK_FALSE(fs::exists(dir / "out.tsv"));
  CHECK_FALSE(fs::exists(dir / "out.tsv.manifest.json"));
}

}  // namespace
}  // namespace alalc
