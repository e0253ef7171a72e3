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

#include <fstream>
#include <sstream>

#include "roda/roda.hpp"

using namespace roda;

namespace {

const std::string kCars =
    "The distance between city A and B is 660 km, the car starting from A drives 32 km/h, and "
    "the car starting from B drives 34 km/h. The two cars are starting from the two places at "
    "the same time heading toward each other. How many hours later would the two cars meet?";

TransformResult run(const std::string& text, std::size_t mention, const std::string& answer) {
  Language lang = detect_language(text);
  auto ms = find_number_mentions(text, lang);
  return transform_problem(text, lang, ms.at(mention), answer, PronounTable::defaults(lang));
}

}  // namespace

TEST_CASE("the two cars problem becomes a distance question", "[transform]") {
  TransformResult r = run(kCars, 0, "10");
  CHECK(r.text ==
        "The car starting from A drives 32 km/h, and the car starting from B drives 34 km/h. The "
        "two cars are starting from the two places at the same time heading toward each other. "
        "10 hours later the two cars would meet. What is the distance between city A and B?");
  CHECK(r.text.find("10 hours later the two cars would meet.") != std::string::npos);
  CHECK(r.pronoun == "how many");
}

TEST_CASE("Chinese transforms", "[transform]") {
  CHECK(run("甲、乙两地相距660千米，两车同时从两地相向而行，甲车每小时行32千米，乙车每小时行34千米，几小时后两车相遇？",
            0, "10")
            .text == "两车同时从两地相向而行，甲车每小时行32千米，乙车每小时行34千米。10小时后两车相遇。甲、乙两地相距多少千米？");
  CHECK(run("学校买来120本书，借出了25%，还剩多少本？", 1, "90").text ==
        "学校买来120本书。还剩90本。借出了百分之多少？");
  CHECK(run("小明有5个苹果，小红有8个苹果，小红比小明多多少个？", 0, "3").text ==
        "小红有8个苹果。小红比小明多3个。小明有多少个苹果？");
}

TEST_CASE("the interrogative after a comparative is the longer pronoun", "[transform]") {
  auto units = segment_discourse("甲有5个，甲比乙多多少个？", Language::kZh);
  QuestionLocation q = locate_question(units, PronounTable::chinese());
  CHECK(q.match.entry->pattern == "多少");
  CHECK(units[q.unit_index].text.substr(q.match.pos, q.match.len) == "多少");
  CHECK(units[q.unit_index].text.substr(0, q.match.pos) == "甲比乙多");
}

TEST_CASE("English transforms", "[transform]") {
  CHECK(run("Tom has 5 apples. He buys 3 more apples. How many apples does Tom have now?", 0, "8")
            .text == "He buys 3 more apples. Tom has 8 apples now. How many apples does Tom have?");
  CHECK(run("Sam spent $5 on a book. He had $20. How much money does Sam have left?", 0, "15")
            .text == "He had $20. Sam has $15 left. How much money did Sam spend on a book?");
  CHECK(run("Mary is 12 years old. Her father is 3 times as old as Mary. How old is her father?",
            0, "36")
            .text == "Her father is 3 times as old as Mary. Her father is 36 years old. How old is Mary?");
}

TEST_CASE("transform failures", "[transform]") {
  CHECK_THROWS_AS(run("Tom has 5 apples and 3 pears.", 0, "8"), TransformError);
  CHECK_THROWS_AS(run("How many are 5 and 3 together?", 0, "8"), TransformError);
  CHECK_THROWS_AS(run("甲数是36，乙数是甲数的3/4，乙数是多少？", 1, "27"), TransformError);
}

TEST_CASE("pronoun table file matches the built-in tables", "[pronouns]") {
  PronounTables loaded = PronounTables::load(RODA_SOURCE_DIR "/data/pronouns.tsv");
  for (Language lang : {Language::kZh, Language::kEn}) {
    const auto& a = loaded.for_language(lang).entries;
    const auto& b = PronounTable::defaults(lang).entries;
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].pattern == b[i].pattern);
      CHECK(a[i].last_unit_only == b[i].last_unit_only);
      CHECK(a[i].answer_slot_template == b[i].answer_slot_template);
    }
  }
}

TEST_CASE("pronoun table parsing", "[pronouns]") {
  PronounTables t = PronounTables::parse("# comment\nen\thow many\tany\n");
  CHECK(t.en.entries.size() == 1);
  CHECK(t.zh.entries.size() == PronounTable::chinese().entries.size());
  CHECK_THROWS(PronounTables::parse("fr\tcombien\tany\n"));
  CHECK_THROWS(PronounTables::parse("en\thow many\tsometimes\n"));
}
