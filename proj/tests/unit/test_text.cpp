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

#include "roda/roda.hpp"

using namespace roda;

TEST_CASE("segmentation is lossless", "[text]") {
  for (const char* text :
       {"A,B?C.", "", "Tom has 5 apples. He buys 3.5 more, how many now?",
        "甲、乙两地相距660千米，两车同时从两地相向而行，几小时后两车相遇？", "no terminator",
        "Mr. Smith paid $1,200. How much is left?"}) {
    auto lang = detect_language(text);
    CHECK(join_units(segment_discourse(text, lang)) == text);
  }
}

TEST_CASE("segmentation boundaries", "[text]") {
  auto units = segment_discourse("A,B?C.", Language::kEn);
  REQUIRE(units.size() == 3);
  CHECK(units[0].text == "A");
  CHECK(units[1].is_question);
  CHECK(segment_discourse("", Language::kEn).empty());
  CHECK(segment_discourse("It costs 3.5 dollars, or 1,200 cents.", Language::kEn).size() == 2);
}

TEST_CASE("language detection", "[text]") {
  CHECK(detect_language("小明有5个苹果") == Language::kZh);
  CHECK(detect_language("Tom has 5 apples") == Language::kEn);
}

TEST_CASE("number mentions", "[text]") {
  auto ms = find_number_mentions("借出了25%，还剩3.5本，共((1)/(2))", Language::kZh);
  REQUIRE(ms.size() == 3);
  CHECK(ms[0].surface == "25%");
  CHECK(ms[0].value == Rational(1, 4));
  CHECK(ms[1].value == Rational(7, 2));
  CHECK(ms[2].value == Rational(1, 2));
  for (std::size_t i = 0; i < ms.size(); ++i) CHECK(ms[i].mention_id == i);
}

TEST_CASE("pure arithmetic problems", "[text]") {
  CHECK(is_pure_arithmetic("Please calculate 5+7*10", Language::kEn));
  CHECK(is_pure_arithmetic("计算：5+7*10", Language::kZh));
  CHECK_FALSE(is_pure_arithmetic("Tom has 5 apples and buys 3 more.", Language::kEn));
}
