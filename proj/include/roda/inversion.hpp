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

#ifndef RODA_INVERSION_HPP_
#define RODA_INVERSION_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "roda/error.hpp"
#include "roda/evaluate.hpp"
#include "roda/expr.hpp"

namespace roda {

/// Name of the new unknown while it sits inside the right-hand side.
inline constexpr std::string_view kNewUnknown = "x'";

enum class VarSide { kLeft, kRight };

/// One of the eight reversion cases, keyed by operator and by the side of
/// the operator that holds the new unknown.
enum class ReversionRule {
  kAddVarRight,  // f = n + v  =>  v = f - n
  kAddVarLeft,   // f = v + n  =>  v = f - n
  kSubVarRight,  // f = n - v  =>  v = n - f
  kSubVarLeft,   // f = v - n  =>  v = f + n
  kMulVarRight,  // f = n * v  =>  v = f / n
  kMulVarLeft,   // f = v * n  =>  v = f / n
  kDivVarRight,  // f = n / v  =>  v = n / f
  kDivVarLeft,   // f = v / n  =>  v = f * n
};

inline constexpr std::size_t kReversionRuleCount = 8;

inline constexpr std::string_view rule_name(ReversionRule r) {
  constexpr std::array<std::string_view, kReversionRuleCount> names = {
      "f=n+v", "f=v+n", "f=n-v", "f=v-n", "f=n*v", "f=v*n", "f=n/v", "f=v/n"};
  return names[static_cast<std::size_t>(r)];
}

struct VarSplit {
  Expr num_subtree;
  Expr var_subtree;
  VarSide side;
  Op op;
};

/// Splits a binary node into its variable-free child and the child holding
/// the (single) variable.
inline VarSplit find_var(const Expr& expr) {
  const auto* b = expr.get_if<BinaryNode>();
  if (b == nullptr) {
    throw InversionError(InversionError::Kind::kNoVariable,
                         "expression is a leaf without the unknown");
  }
  bool left = contains_variable(b->left);
  bool right = contains_variable(b->right);
  if (left && right) {
    throw InversionError(InversionError::Kind::kBothSidesVariable,
                         "both operands contain the unknown");
  }
  if (!left && !right) {
    throw InversionError(InversionError::Kind::kNoVariable,
                         "no operand contains the unknown");
  }
  if (left) return VarSplit{b->right, b->left, VarSide::kLeft, b->op};
  return VarSplit{b->left, b->right, VarSide::kRight, b->op};
}

struct InversionFrame {
  Expr left_tree;
  Op root_op;
  Expr num_subtree;
  Expr var_subtree;
};

struct InversionResult {
  Equation equation;
  std::vector<ReversionRule> trace;
  std::vector<InversionFrame> frames;
};

namespace detail {

inline ReversionRule classify(Op op, VarSide side) {
  bool right = side == VarSide::kRight;
  switch (op) {
    case Op::kAdd:
      return right ? ReversionRule::kAddVarRight : ReversionRule::kAddVarLeft;
    case Op::kSub:
      return right ? ReversionRule::kSubVarRight : ReversionRule::kSubVarLeft;
    case Op::kMul:
      return right ? ReversionRule::kMulVarRight : ReversionRule::kMulVarLeft;
    case Op::kDiv:
      return right ? ReversionRule::kDivVarRight : ReversionRule::kDivVarLeft;
    case Op::kPow:
      break;
  }
  throw InversionError(InversionError::Kind::kPowerEncountered,
                       "power operation cannot be reversed");
}

inline Expr apply_rule(ReversionRule rule, const Expr& f, const Expr& n) {
  switch (rule) {
    case ReversionRule::kAddVarRight:
    case ReversionRule::kAddVarLeft:
      return sub(f, n);
    case ReversionRule::kSubVarRight:
      return sub(n, f);
    case ReversionRule::kSubVarLeft:
      return add(f, n);
    case ReversionRule::kMulVarRight:
    case ReversionRule::kMulVarLeft:
      return div(f, n);
    case ReversionRule::kDivVarRight:
      return div(n, f);
    case ReversionRule::kDivVarLeft:
      return mul(f, n);
  }
  return f;
}

}  // namespace detail

/// Reverses `equation` around the numeric leaf `target_leaf_id`: the old
/// unknown takes the value `answer`, the target becomes the new unknown, and
/// operators are peeled off the right-hand side one at a time until the new
/// unknown stands alone. The returned equation keeps the original unknown
/// name, with the accumulated left tree as its right-hand side.
inline InversionResult invert(const Equation& equation,
                              std::size_t target_leaf_id,
                              const Rational& answer) {
  if (answer < 0) {
    throw InversionError(InversionError::Kind::kNegativeAnswer,
                         "negative answers have no numeral surface");
  }
  if (contains_variable(equation.rhs)) {
    throw InversionError(InversionError::Kind::kBothSidesVariable,
                         "equation is not solved for its unknown");
  }
  if (target_leaf_id >= numeric_leaves(equation.rhs).size()) {
    throw InversionError(InversionError::Kind::kBadTarget,
                         "target leaf id out of range");
  }

  InversionResult result;
  Expr left = numeral(answer);
  Expr right = replace_numeric_leaf(equation.rhs, target_leaf_id,
                                    Expr::variable(std::string(kNewUnknown)));
  while (!right.is<VariableLeaf>()) {
    VarSplit split = find_var(right);
    ReversionRule rule = detail::classify(split.op, split.side);
    result.frames.push_back(
        InversionFrame{left, split.op, split.num_subtree, split.var_subtree});
    result.trace.push_back(rule);
    left = detail::apply_rule(rule, left, split.num_subtree);
    right = split.var_subtree;
  }
  try {
    evaluate(left);
  } catch (const DivisionByZero&) {
    throw InversionError(InversionError::Kind::kDivisionByZero,
                         "reversed equation divides by zero");
  }
  result.equation = Equation{equation.unknown, left};
  return result;
}

}  // namespace roda

#endif  // RODA_INVERSION_HPP_
