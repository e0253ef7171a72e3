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

#ifndef RODA_EVALUATE_HPP_
#define RODA_EVALUATE_HPP_

#include <map>
#include <string>

#include "roda/error.hpp"
#include "roda/expr.hpp"
#include "roda/rational.hpp"

namespace roda {

using Bindings = std::map<std::string, Rational>;

namespace detail {

inline Rational integer_power(const Rational& base, const Rational& exponent) {
  if (!is_integer(exponent)) throw NonIntegerExponent();
  Integer e = numerator(exponent);
  bool negative = e < 0;
  if (negative) e = -e;
  if (e > 4096) throw Error("exponent too large");
  if (negative && base == 0) throw DivisionByZero();
  Rational result = 1;
  Rational b = base;
  unsigned long k = e.convert_to<unsigned long>();
  while (k != 0) {
    if (k & 1u) result *= b;
    b *= b;
    k >>= 1u;
  }
  return negative ? Rational(1) / result : result;
}

}  // namespace detail

/// Exact value of `e`. Slots are looked up as "temp<i>".
inline Rational evaluate(const Expr& e, const Bindings& bindings = {}) {
  const auto& data = e.node().data;
  if (auto* n = std::get_if<NumberLeaf>(&data)) return n->value;
  if (auto* c = std::get_if<ConstantLeaf>(&data)) return c->value;
  if (auto* v = std::get_if<VariableLeaf>(&data)) {
    auto it = bindings.find(v->name);
    if (it == bindings.end()) throw UnboundVariable(v->name);
    return it->second;
  }
  if (auto* s = std::get_if<SlotLeaf>(&data)) {
    std::string name = "temp" + std::to_string(s->index);
    auto it = bindings.find(name);
    if (it == bindings.end()) throw UnboundVariable(name);
    return it->second;
  }
  const auto& b = std::get<BinaryNode>(data);
  Rational l = evaluate(b.left, bindings);
  Rational r = evaluate(b.right, bindings);
  switch (b.op) {
    case Op::kAdd:
      return l + r;
    case Op::kSub:
      return l - r;
    case Op::kMul:
      return l * r;
    case Op::kDiv:
      if (r == 0) throw DivisionByZero();
      return l / r;
    case Op::kPow:
      return detail::integer_power(l, r);
  }
  throw Error("unknown operator");
}

}  // namespace roda

#endif  // RODA_EVALUATE_HPP_
