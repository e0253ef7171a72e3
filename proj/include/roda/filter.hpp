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

#ifndef RODA_FILTER_HPP_
#define RODA_FILTER_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "roda/expr.hpp"
#include "roda/mentions.hpp"

namespace roda {

enum class RejectReason {
  kTextDuplicate,      // R1_TEXT_DUP
  kEquationDuplicate,  // R2_EQ_DUP
  kPower,              // R3_POWER
  kConstant,           // R4_CONSTANT
  kUnaligned,          // UNALIGNED
  kInsignificant,      // INSIGNIFICANT
};

inline constexpr std::string_view reason_code(RejectReason r) {
  switch (r) {
    case RejectReason::kTextDuplicate:
      return "R1_TEXT_DUP";
    case RejectReason::kEquationDuplicate:
      return "R2_EQ_DUP";
    case RejectReason::kPower:
      return "R3_POWER";
    case RejectReason::kConstant:
      return "R4_CONSTANT";
    case RejectReason::kUnaligned:
      return "UNALIGNED";
    case RejectReason::kInsignificant:
      return "INSIGNIFICANT";
  }
  return "?";
}

inline constexpr RejectReason kAllReasons[] = {
    RejectReason::kTextDuplicate, RejectReason::kEquationDuplicate,
    RejectReason::kPower,         RejectReason::kConstant,
    RejectReason::kUnaligned,     RejectReason::kInsignificant,
};

/// A number considered for reversal. Mention-backed candidates come from the
/// text; leaf-only candidates are equation numbers no significant mention
/// matches (pi, an unmentioned 1, a power exponent).
struct Candidate {
  std::optional<NumberMention> mention;
  std::optional<std::size_t> leaf_id;
  std::optional<RejectReason> reason;

  bool accepted() const { return !reason.has_value(); }
};

/// Applies, in order: INSIGNIFICANT (value not in the equation), R1 (value
/// repeated among significant mentions), R2 (value repeated among equation
/// leaves), R3 (leaf under a power), R4 (leaf is a constant). Survivors are
/// aligned one-to-one with their equation leaf.
inline std::vector<Candidate> align_and_filter(
    const std::vector<NumberMention>& mentions, const Equation& equation) {
  auto leaves = numeric_leaves(equation.rhs);
  auto leaves_with = [&](const Rational& v) {
    std::vector<const LeafInfo*> out;
    for (const auto& l : leaves) {
      if (leaf_value(l.leaf) == v) out.push_back(&l);
    }
    return out;
  };

  std::vector<Candidate> out;
  std::vector<std::size_t> significant;
  std::map<Rational, std::size_t> sig_count;
  for (const auto& m : mentions) {
    if (leaves_with(m.value).empty()) {
      out.push_back(Candidate{m, std::nullopt, RejectReason::kInsignificant});
      continue;
    }
    significant.push_back(out.size());
    ++sig_count[m.value];
    out.push_back(Candidate{m, std::nullopt, std::nullopt});
  }

  for (std::size_t idx : significant) {
    Candidate& c = out[idx];
    const Rational& v = c.mention->value;
    auto matched = leaves_with(v);
    if (sig_count[v] > 1) {
      c.reason = RejectReason::kTextDuplicate;
    } else if (matched.size() > 1) {
      c.reason = RejectReason::kEquationDuplicate;
    } else if (matched.front()->under_power) {
      c.reason = RejectReason::kPower;
    } else if (matched.front()->leaf.is<ConstantLeaf>()) {
      c.reason = RejectReason::kConstant;
    }
    if (matched.size() == 1) c.leaf_id = matched.front()->id;
  }

  for (const auto& l : leaves) {
    if (sig_count.count(leaf_value(l.leaf)) != 0) continue;
    RejectReason r = RejectReason::kUnaligned;
    if (l.under_power) {
      r = RejectReason::kPower;
    } else if (l.leaf.is<ConstantLeaf>()) {
      r = RejectReason::kConstant;
    }
    out.push_back(Candidate{std::nullopt, l.id, r});
  }
  return out;
}

inline std::vector<Candidate> align_and_filter(std::string_view text,
                                               Language lang,
                                               const Equation& equation) {
  return align_and_filter(find_number_mentions(text, lang), equation);
}

}  // namespace roda

#endif  // RODA_FILTER_HPP_
