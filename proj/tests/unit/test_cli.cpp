//
// Copyright 2026 The RODA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "roda");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = roda::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("roda_cli_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::string kData = RODA_TEST_DATA_DIR;

}  // namespace

TEST_CASE("invert prints the normalized reversed equation", "[cli]") {
  Outcome o = run({"invert", "x=660/(32+34)", "--target", "660", "--answer", "10"});
  CHECK(o.code == 0);
  CHECK(o.out == "x=10*(32+34)\n");

  Outcome j = run({"--json", "invert", "x=660/(32+34)", "--target", "660", "--answer", "10"});
  REQUIRE(j.code == 0);
  auto parsed = roda::Json::parse(j.out);
  CHECK(parsed["verified"] == true);
  CHECK(parsed["value"] == "660");
}

TEST_CASE("invert reports rule codes", "[cli]") {
  Outcome dup = run({"invert", "x=4*2+1", "--target", "2", "--answer", "9", "--text",
                     "He bought 4 packs of 2 pens, then 1 more, and 2 friends came."});
  CHECK(dup.code == 1);
  CHECK(dup.err.find("R1_TEXT_DUP") != std::string::npos);
  Outcome eqdup = run({"invert", "x=2*2", "--target", "2", "--answer", "4"});
  CHECK(eqdup.code == 1);
  CHECK(eqdup.err.find("R2_EQ_DUP") != std::string::npos);
}

TEST_CASE("normalize subcommand", "[cli]") {
  Outcome o = run({"normalize", "x=c-a-c+(c*a)+(b/b)"});
  CHECK(o.code == 0);
  CHECK(o.out == "x=1-a+(a*c)\n");
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"invert", "x=1+2"}).code == 2);
  std::string out = temp_path("missing.json");
  Outcome missing = run({"augment", "--input", kData + "/nope.json", "--output", out});
  CHECK(missing.code == 1);
  CHECK(roda::Json::parse(missing.err)["error"] == "io");
  CHECK(run({"augment", "--input", kData + "/fig1.json", "--output", out, "--ratio", "0"}).code ==
        2);
  CHECK(run({"augment", "--input", kData + "/fig1.json", "--output", out, "--ratio", "-1"})
            .code == 2);
  CHECK(run({"invert", "x=1+", "--target", "1", "--answer", "3"}).code == 1);
}

TEST_CASE("augment, verify and stats round trip", "[cli]") {
  std::string out = temp_path("aug.json");
  std::string stats = temp_path("aug.stats.json");
  Outcome a = run({"augment", "--input", kData + "/corpus_zh.json", "--output", out, "--stats",
                   stats, "--seed", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out.find("Augmented Problems") != std::string::npos);
  std::string first = slurp(out);
  REQUIRE(run({"augment", "--input", kData + "/corpus_zh.json", "--output", out, "--stats", stats,
               "--seed", "3"})
              .code == 0);
  CHECK(slurp(out) == first);

  Outcome v = run({"verify", "--pairs", out, "--originals", kData + "/corpus_zh.json"});
  CHECK(v.code == 0);
  CHECK(v.out.find("(100.0000%)") != std::string::npos);

  Outcome s = run({"stats", stats});
  CHECK(s.code == 0);
  CHECK(s.out.find("Original Problems") != std::string::npos);

  Outcome r1 = run({"augment", "--input", kData + "/corpus_zh.json", "--output", out, "--ratio",
                    "1:1", "--json"});
  REQUIRE(r1.code == 0);
  auto summary = roda::Json::parse(r1.out);
  CHECK(summary["stats"]["emitted"] == 12);
  std::remove(out.c_str());
  std::remove(stats.c_str());
}
