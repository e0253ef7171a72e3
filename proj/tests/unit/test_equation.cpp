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

TEST_CASE("parse and serialize round trip", "[equation]") {
  for (const char* text : {"x=660/(32+34)", "x=5+7*10", "x=(5+7)*10", "x=8-(18/3)",
                           "x=2^3", "x=120*(1-25%)", "x=3.14*5*5", "x=((1)/(3))*6"}) {
    Equation eq = parse_equation(text);
    Equation again = parse_equation(serialize(eq));
    CHECK(serialize(again) == serialize(eq));
    CHECK(evaluate(again.rhs) == evaluate(eq.rhs));
  }
}

TEST_CASE("generated trees survive serialization", "[equation][property]") {
  testkit::ExprGenerator g(11);
  g.op_weights[Op::kPow] = 0.3;
  for (int i = 0; i < 300; ++i) {
    Equation eq = testkit::gen_equation(g);
    Equation back = parse_equation(serialize(eq));
    REQUIRE(back.rhs == eq.rhs);
  }
}

TEST_CASE("exact rational evaluation", "[equation]") {
  CHECK(evaluate(parse_equation("x=660/(32+34)").rhs) == 10);
  CHECK(evaluate(parse_equation("x=1/3+1/6").rhs) == Rational(1, 2));
  CHECK(evaluate(parse_equation("x=120*(1-25%)").rhs) == 90);
  CHECK(evaluate(parse_equation("x=2^3").rhs) == 8);
  CHECK(evaluate(parse_expression("a*b-c", {.constants = &ConstantTable::defaults(),
                                            .allow_symbols = true}),
                 Bindings{{"a", 2}, {"b", 5}, {"c", 1}}) == 9);
}

TEST_CASE("pi is a constant worth 3.14", "[equation]") {
  Equation eq = parse_equation("x=pi*5");
  auto leaves = numeric_leaves(eq.rhs);
  REQUIRE(leaves.size() == 2);
  CHECK(leaves[0].leaf.is<ConstantLeaf>());
  CHECK(evaluate(eq.rhs) == Rational(157, 10));
}

TEST_CASE("malformed equations are rejected", "[equation]") {
  CHECK_THROWS_AS(parse_equation("x=5+"), SyntaxError);
  CHECK_THROWS_AS(parse_equation("x=(5+3"), SyntaxError);
  CHECK_THROWS_AS(parse_equation("5+3"), SyntaxError);
  CHECK_THROWS_AS(evaluate(parse_equation("x=5/(3-3)").rhs), DivisionByZero);
  CHECK_THROWS_AS(evaluate(parse_equation("x=2^(1/2)").rhs), NonIntegerExponent);
}

TEST_CASE("number formatting", "[equation]") {
  CHECK(format_number(Rational(10)) == "10");
  CHECK(format_number(Rational(157, 2)) == "78.5");
  CHECK(format_number(Rational(1, 3)) == "((1)/(3))");
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("25%") == Rational(1, 4));
  CHECK_FALSE(parse_rational("abc").has_value());
}
