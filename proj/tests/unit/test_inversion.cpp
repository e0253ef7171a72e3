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

std::size_t leaf_with(const Equation& eq, const Rational& v) {
  for (const auto& l : numeric_leaves(eq.rhs)) {
    if (leaf_value(l.leaf) == v) return l.id;
  }
  FAIL("no leaf with that value");
  return 0;
}

}  // namespace

TEST_CASE("reversing the distance of the two cars", "[inversion]") {
  Equation eq = parse_equation("x=660/(32+34)");
  InversionResult inv = invert(eq, leaf_with(eq, 660), 10);
  CHECK(serialize(normalize(inv.equation)) == "x=10*(32+34)");
  REQUIRE(inv.trace.size() == 1);
  CHECK(inv.trace.front() == ReversionRule::kDivVarLeft);
  CHECK(evaluate(inv.equation.rhs) == 660);
}

TEST_CASE("each reversion rule", "[inversion]") {
  struct Case {
    const char* equation;
    Rational target;
    ReversionRule rule;
  };
  const Case cases[] = {
      {"x=3+5", 5, ReversionRule::kAddVarRight}, {"x=3+5", 3, ReversionRule::kAddVarLeft},
      {"x=9-4", 4, ReversionRule::kSubVarRight}, {"x=9-4", 9, ReversionRule::kSubVarLeft},
      {"x=6*7", 7, ReversionRule::kMulVarRight}, {"x=6*7", 6, ReversionRule::kMulVarLeft},
      {"x=8/2", 2, ReversionRule::kDivVarRight}, {"x=8/2", 8, ReversionRule::kDivVarLeft},
  };
  for (const auto& c : cases) {
    Equation eq = parse_equation(c.equation);
    InversionResult inv = invert(eq, leaf_with(eq, c.target), evaluate(eq.rhs));
    REQUIRE(inv.trace.size() == 1);
    CHECK(inv.trace.front() == c.rule);
    CHECK(evaluate(inv.equation.rhs) == c.target);
  }
}

TEST_CASE("nested reversal", "[inversion]") {
  Equation eq = parse_equation("x=(8-2)*3");
  InversionResult inv = invert(eq, leaf_with(eq, 2), 18);
  CHECK(serialize(normalize(inv.equation)) == "x=8-(18/3)");
  CHECK(inv.trace.size() == 2);
}

TEST_CASE("inversion refusals", "[inversion]") {
  Equation pw = parse_equation("x=4^3");
  CHECK_THROWS_AS(invert(pw, 0, 64), InversionError);
  Equation eq = parse_equation("x=9-4");
  CHECK_THROWS_AS(invert(eq, 0, -1), InversionError);
  CHECK_THROWS_AS(invert(eq, 7, 5), InversionError);
}

TEST_CASE("small inversion oracle", "[inversion][property]") {
  testkit::ExprGenerator g(42);
  auto report = testkit::run_oracle(g, 400, 1);
  CHECK(report.mismatches.empty());
  CHECK(report.leaves_checked > 400);
  CHECK(report.min_branch() > 0);
}

TEST_CASE("oracle is independent of the thread count", "[inversion][property]") {
  testkit::ExprGenerator g(3);
  auto one = testkit::run_oracle(g, 60, 1);
  auto three = testkit::run_oracle(g, 60, 3);
  CHECK(one.leaves_checked == three.leaves_checked);
  CHECK(one.branches == three.branches);
}
