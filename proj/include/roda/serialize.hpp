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

#ifndef RODA_SERIALIZE_HPP_
#define RODA_SERIALIZE_HPP_

#include <string>

#include "roda/expr.hpp"

namespace roda {

struct SerializeStyle {
  // Wrap * and / terms of a sum in parentheses, as the source datasets do:
  // "1-a+(a*c)". With this off only precedence-forced parentheses appear.
  bool parenthesize_products_in_sums = true;

  static SerializeStyle minimal() { return SerializeStyle{false}; }
};

namespace detail {

inline bool needs_parens(Op parent, const Expr& child, bool right_side,
                         const SerializeStyle& style) {
  const auto* b = child.get_if<BinaryNode>();
  if (b == nullptr) return false;
  int pp = precedence(parent);
  int cp = precedence(b->op);
  if (parent == Op::kPow) return right_side ? cp < pp : cp <= pp;
  if (cp < pp) return true;
  // Same level on the right always needs grouping to keep the tree shape.
  if (cp == pp && right_side) return true;
  return style.parenthesize_products_in_sums && pp == 1 && cp == 2;
}

inline void write(const Expr& e, const SerializeStyle& style, std::string& out) {
  const auto& data = e.node().data;
  if (auto* n = std::get_if<NumberLeaf>(&data)) {
    out += n->surface;
  } else if (auto* c = std::get_if<ConstantLeaf>(&data)) {
    out += c->surface;
  } else if (auto* v = std::get_if<VariableLeaf>(&data)) {
    out += v->name;
  } else if (auto* s = std::get_if<SlotLeaf>(&data)) {
    out += "temp" + std::to_string(s->index);
  } else {
    const auto& b = std::get<BinaryNode>(data);
    auto side = [&](const Expr& child, bool right) {
      bool paren = needs_parens(b.op, child, right, style);
      if (paren) out += '(';
      write(child, style, out);
      if (paren) out += ')';
    };
    side(b.left, false);
    out += op_symbol(b.op);
    side(b.right, true);
  }
}

}  // namespace detail

inline std::string serialize(const Expr& e, const SerializeStyle& style = {}) {
  std::string out;
  detail::write(e, style, out);
  return out;
}

inline std::string serialize(const Equation& eq, const SerializeStyle& style = {}) {
  return eq.unknown + "=" + serialize(eq.rhs, style);
}

}  // namespace roda

#endif  // RODA_SERIALIZE_HPP_
