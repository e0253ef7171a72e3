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

#ifndef RODA_TEMPLATE_HPP_
#define RODA_TEMPLATE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "roda/error.hpp"
#include "roda/expr.hpp"
#include "roda/mentions.hpp"
#include "roda/serialize.hpp"

namespace roda {

/// An equation whose problem numbers are replaced by occurrence slots.
struct TemplateEquation {
  std::string unknown = "x";
  Expr rhs;
  // (slot index, mention id), ordered by slot index.
  std::vector<std::pair<std::size_t, std::size_t>> slot_map;
};

inline std::string serialize(const TemplateEquation& t,
                             const SerializeStyle& style = {}) {
  return t.unknown + "=" + serialize(t.rhs, style);
}

/// Replaces each NumberLeaf with the slot of the first text mention of equal
/// value. Constants stay verbatim.
inline TemplateEquation templatize(const Equation& equation,
                                   const std::vector<NumberMention>& mentions) {
  TemplateEquation out;
  out.unknown = equation.unknown;
  std::vector<bool> used(mentions.size(), false);
  out.rhs = transform(equation.rhs, [&](const Expr& e) -> Expr {
    const auto* n = e.get_if<NumberLeaf>();
    if (n == nullptr) return e;
    for (const auto& m : mentions) {
      if (m.value == n->value) {
        used[m.mention_id] = true;
        return Expr::slot(m.mention_id);
      }
    }
    throw UnalignedNumber("equation number " + n->surface +
                          " has no mention in the text");
  });
  for (const auto& m : mentions) {
    if (used[m.mention_id]) out.slot_map.emplace_back(m.mention_id, m.mention_id);
  }
  return out;
}

/// Inverse of templatize: slots become the surfaces of their mentions.
inline Equation instantiate(const TemplateEquation& t,
                            const std::vector<NumberMention>& mentions) {
  Expr rhs = transform(t.rhs, [&](const Expr& e) -> Expr {
    const auto* s = e.get_if<SlotLeaf>();
    if (s == nullptr) return e;
    for (const auto& [slot, mention] : t.slot_map) {
      if (slot == s->index) {
        const auto& m = mentions.at(mention);
        return Expr::number(m.surface, m.value);
      }
    }
    throw Error("slot temp" + std::to_string(s->index) + " has no mention");
  });
  return Equation{t.unknown, rhs};
}

}  // namespace roda

#endif  // RODA_TEMPLATE_HPP_
