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

#include <map>

#include "roda/roda.hpp"
#include "roda/testkit.hpp"

using namespace roda;

namespace {

std::multiset<std::string> codes(std::string_view text, std::string_view equation) {
  std::multiset<std::string> out;
  for (const auto& c : align_and_filter(text, detect_language(text), parse_equation(equation))) {
    if (c.reason) out.insert(std::string(reason_code(*c.reason)));
  }
  return out;
}

}  // namespace

TEST_CASE("filter rules", "[filter]") {
  CHECK(codes("He has 3 red and 3 blue balls.", "x=3+3").count("R1_TEXT_DUP") == 2);
  CHECK(codes("Each side is 2 cm.", "x=2*2").count("R2_EQ_DUP") == 1);
  CHECK(codes("A cube has side 4, raised to power 3.", "x=4^3").count("R3_POWER") == 2);
  CHECK(codes("A circle has radius 5.", "x=pi*5").count("R4_CONSTANT") == 1);
  CHECK(codes("He walked 7 miles in 2 hours.", "x=7/2").empty());
  CHECK(codes("Room 101 holds 7 and 2.", "x=7/2").count("INSIGNIFICANT") == 1);
}

TEST_CASE("accepted candidates align one to one", "[filter][property]") {
  testkit::ExprGenerator g(5);
  g.distinct_leaves = false;
  g.leaf_max = 12;
  for (int i = 0; i < 300; ++i) {
    Equation eq = testkit::gen_equation(g);
    std::string text = testkit::synthetic_text(eq);
    auto cands = align_and_filter(text, Language::kEn, eq);
    auto leaves = numeric_leaves(eq.rhs);
    std::map<std::size_t, int> used;
    for (const auto& c : cands) {
      if (!c.accepted()) continue;
      REQUIRE(c.leaf_id.has_value());
      REQUIRE(c.mention.has_value());
      CHECK(++used[*c.leaf_id] == 1);
      CHECK(leaf_value(leaves[*c.leaf_id].leaf) == c.mention->value);
      CHECK_FALSE(leaves[*c.leaf_id].under_power);
    }
  }
}

TEST_CASE("adding a duplicate mention never accepts more", "[filter][property]") {
  testkit::ExprGenerator g(9);
  for (int i = 0; i < 200; ++i) {
    Equation eq = testkit::gen_equation(g);
    std::string text = testkit::synthetic_text(eq);
    auto accepted = [&](const std::string& t) {
      std::size_t n = 0;
      for (const auto& c : align_and_filter(t, Language::kEn, eq)) n += c.accepted();
      return n;
    };
    auto base = accepted(text);
    auto first = find_number_mentions(text, Language::kEn);
    if (first.empty()) continue;
    CHECK(accepted(text + " and " + first.front().surface) <= base);
  }
}
