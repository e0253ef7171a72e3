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
#include "roda/testkit.hpp"

using namespace roda;

namespace {

Equation symbolic(std::string_view text) {
  ParseOptions po;
  po.allow_symbols = true;
  return parse_equation(text, po);
}

}  // namespace

TEST_CASE("normalizing a symbolic equation", "[normalize]") {
  CHECK(serialize(normalize(symbolic("x=c-a-c+(c*a)+(b/b)"))) == "x=1-a+(a*c)");
  CHECK(serialize(normalize(symbolic("x=a*1+0"))) == "x=a");
  CHECK(serialize(normalize(symbolic("x=b+a"))) == "x=a+b");
  CHECK(serialize(normalize(symbolic("x=0-a+b"))) == "x=b-a");
}

TEST_CASE("numbers with a text occurrence are not folded", "[normalize]") {
  Equation eq = parse_equation("x=10*(34+32)");
  auto mentions = find_number_mentions("660 km, 32 km/h and 34 km/h, 10 hours", Language::kEn);
  CHECK(serialize(normalize(eq, occurrence_index(mentions))) == "x=10*(32+34)");
  CHECK(serialize(normalize(parse_equation("x=4*(5+3)"))) == "x=4*(3+5)");
}

TEST_CASE("normalization preserves value and is idempotent", "[normalize][property]") {
  testkit::SymbolicGenerator g(2024);
  std::size_t compared = 0;
  for (int i = 0; i < 1000; ++i) {
    Equation eq = g.equation();
    Equation n;
    try {
      n = normalize(eq);
    } catch (const DivisionByZero&) {
      for (int k = 0; k < 20; ++k) CHECK_THROWS(evaluate(eq.rhs, g.bindings()));
      continue;
    }
    REQUIRE(serialize(normalize(n)) == serialize(n));
    for (int k = 0; k < 100; ++k) {
      Bindings b = g.bindings();
      Rational expected;
      try {
        expected = evaluate(eq.rhs, b);
      } catch (const DivisionByZero&) {
        continue;
      }
      REQUIRE(evaluate(n.rhs, b) == expected);
      ++compared;
    }
  }
  CHECK(compared > 90000);
}

TEST_CASE("normal form never grows", "[normalize][property]") {
  testkit::SymbolicGenerator g(77);
  for (int i = 0; i < 300; ++i) {
    Equation eq = g.equation();
    std::size_t size = 0;
    try {
      size = node_count(simplify(eq.rhs));
    } catch (const DivisionByZero&) {
      continue;
    }
    CHECK(size <= node_count(eq.rhs));
  }
}

TEST_CASE("templates are a bijection on aligned numbers", "[normalize][property]") {
  testkit::ExprGenerator g(17);
  for (int i = 0; i < 300; ++i) {
    Equation eq = testkit::gen_equation(g);
    auto mentions = find_number_mentions(testkit::synthetic_text(eq), Language::kEn);
    TemplateEquation t = templatize(eq, mentions);
    CHECK(serialize(instantiate(t, mentions)) == serialize(eq));
    std::set<std::size_t> slots;
    for (const auto& [slot, mention] : t.slot_map) CHECK(slots.insert(slot).second);
  }
  CHECK_THROWS_AS(templatize(parse_equation("x=3+4"),
                             find_number_mentions("only 3 here", Language::kEn)),
                  UnalignedNumber);
}
