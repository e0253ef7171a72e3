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

#ifndef RODA_EXPR_HPP_
#define RODA_EXPR_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "roda/rational.hpp"

namespace roda {

enum class Op : char { kAdd = '+', kSub = '-', kMul = '*', kDiv = '/', kPow = '^' };

inline char op_symbol(Op op) { return static_cast<char>(op); }

inline int precedence(Op op) {
  switch (op) {
    case Op::kAdd:
    case Op::kSub:
      return 1;
    case Op::kMul:
    case Op::kDiv:
      return 2;
    case Op::kPow:
      return 3;
  }
  return 0;
}

enum class ConstantKind { kPi, kOne, kUnitFactor };

class Expr;
struct Node;

struct NumberLeaf {
  std::string surface;
  Rational value;
};

/// Numbers that are never reversed: pi, an explicit 1, unit-conversion terms.
struct ConstantLeaf {
  ConstantKind kind;
  std::string surface;
  Rational value;
};

struct VariableLeaf {
  std::string name;
};

/// Template slot "temp<index>"; index is the text occurrence ordinal.
struct SlotLeaf {
  std::size_t index;
};

struct BinaryNode;

/// Immutable binary expression tree. Copies share structure.
class Expr {
 public:
  Expr() = default;

  static Expr number(std::string surface, Rational value);
  static Expr constant(ConstantKind kind, std::string surface, Rational value);
  static Expr variable(std::string name);
  static Expr slot(std::size_t index);
  static Expr binary(Op op, Expr left, Expr right);

  bool valid() const noexcept { return static_cast<bool>(node_); }

  template <typename T>
  bool is() const;
  template <typename T>
  const T& as() const;
  template <typename T>
  const T* get_if() const;

  bool is_leaf() const { return !is<BinaryNode>(); }
  bool is_numeric_leaf() const { return is<NumberLeaf>() || is<ConstantLeaf>(); }

  const Node& node() const { return *node_; }

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct BinaryNode {
  Op op;
  Expr left;
  Expr right;
};

struct Node {
  std::variant<NumberLeaf, ConstantLeaf, VariableLeaf, SlotLeaf, BinaryNode> data;
};

inline Expr Expr::number(std::string surface, Rational value) {
  return Expr(std::make_shared<const Node>(
      Node{NumberLeaf{std::move(surface), std::move(value)}}));
}
inline Expr Expr::constant(ConstantKind kind, std::string surface,
                           Rational value) {
  return Expr(std::make_shared<const Node>(
      Node{ConstantLeaf{kind, std::move(surface), std::move(value)}}));
}
inline Expr Expr::variable(std::string name) {
  return Expr(std::make_shared<const Node>(Node{VariableLeaf{std::move(name)}}));
}
inline Expr Expr::slot(std::size_t index) {
  return Expr(std::make_shared<const Node>(Node{SlotLeaf{index}}));
}
inline Expr Expr::binary(Op op, Expr left, Expr right) {
  return Expr(std::make_shared<const Node>(
      Node{BinaryNode{op, std::move(left), std::move(right)}}));
}

template <typename T>
bool Expr::is() const {
  return std::holds_alternative<T>(node_->data);
}
template <typename T>
const T& Expr::as() const {
  return std::get<T>(node_->data);
}
template <typename T>
const T* Expr::get_if() const {
  return std::get_if<T>(&node_->data);
}

inline Expr add(Expr a, Expr b) { return Expr::binary(Op::kAdd, std::move(a), std::move(b)); }
inline Expr sub(Expr a, Expr b) { return Expr::binary(Op::kSub, std::move(a), std::move(b)); }
inline Expr mul(Expr a, Expr b) { return Expr::binary(Op::kMul, std::move(a), std::move(b)); }
inline Expr div(Expr a, Expr b) { return Expr::binary(Op::kDiv, std::move(a), std::move(b)); }
inline Expr pow(Expr a, Expr b) { return Expr::binary(Op::kPow, std::move(a), std::move(b)); }

/// Leaf for a computed value, surfaced with format_number.
inline Expr numeral(const Rational& value) {
  return Expr::number(format_number(value), value);
}

/// Structural equality. Numeric leaves compare by kind, surface and value.
inline bool operator==(const Expr& a, const Expr& b) {
  if (&a.node() == &b.node()) return true;
  const auto& x = a.node().data;
  const auto& y = b.node().data;
  if (x.index() != y.index()) return false;
  if (auto* n = std::get_if<NumberLeaf>(&x)) {
    const auto& m = std::get<NumberLeaf>(y);
    return n->surface == m.surface && n->value == m.value;
  }
  if (auto* c = std::get_if<ConstantLeaf>(&x)) {
    const auto& d = std::get<ConstantLeaf>(y);
    return c->kind == d.kind && c->surface == d.surface && c->value == d.value;
  }
  if (auto* v = std::get_if<VariableLeaf>(&x)) {
    return v->name == std::get<VariableLeaf>(y).name;
  }
  if (auto* s = std::get_if<SlotLeaf>(&x)) {
    return s->index == std::get<SlotLeaf>(y).index;
  }
  const auto& p = std::get<BinaryNode>(x);
  const auto& q = std::get<BinaryNode>(y);
  return p.op == q.op && p.left == q.left && p.right == q.right;
}

inline bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

inline std::size_t node_count(const Expr& e) {
  if (auto* b = e.get_if<BinaryNode>()) {
    return 1 + node_count(b->left) + node_count(b->right);
  }
  return 1;
}

/// Height of the tree; a leaf has depth 0.
inline std::size_t depth(const Expr& e) {
  if (auto* b = e.get_if<BinaryNode>()) {
    return 1 + std::max(depth(b->left), depth(b->right));
  }
  return 0;
}

/// Pre-order visit of every node.
inline void visit(const Expr& e, const std::function<void(const Expr&)>& fn) {
  fn(e);
  if (auto* b = e.get_if<BinaryNode>()) {
    visit(b->left, fn);
    visit(b->right, fn);
  }
}

inline bool contains_variable(const Expr& e) {
  bool found = false;
  visit(e, [&](const Expr& n) { found = found || n.is<VariableLeaf>(); });
  return found;
}

inline bool contains_variable(const Expr& e, const std::string& name) {
  bool found = false;
  visit(e, [&](const Expr& n) {
    if (auto* v = n.get_if<VariableLeaf>()) found = found || v->name == name;
  });
  return found;
}

inline std::set<std::string> variable_names(const Expr& e) {
  std::set<std::string> names;
  visit(e, [&](const Expr& n) {
    if (auto* v = n.get_if<VariableLeaf>()) names.insert(v->name);
  });
  return names;
}

inline std::set<Op> operators(const Expr& e) {
  std::set<Op> ops;
  visit(e, [&](const Expr& n) {
    if (auto* b = n.get_if<BinaryNode>()) ops.insert(b->op);
  });
  return ops;
}

/// A numeric leaf (NumberLeaf or ConstantLeaf) addressed by its left-to-right
/// ordinal among numeric leaves.
struct LeafInfo {
  std::size_t id;
  Expr leaf;
  bool under_power;  // some ancestor is a ^ node
};

inline std::vector<LeafInfo> numeric_leaves(const Expr& e) {
  std::vector<LeafInfo> out;
  std::function<void(const Expr&, bool)> walk = [&](const Expr& n, bool pw) {
    if (auto* b = n.get_if<BinaryNode>()) {
      bool child_pw = pw || b->op == Op::kPow;
      walk(b->left, child_pw);
      walk(b->right, child_pw);
    } else if (n.is_numeric_leaf()) {
      out.push_back(LeafInfo{out.size(), n, pw});
    }
  };
  walk(e, false);
  return out;
}

inline const Rational& leaf_value(const Expr& leaf) {
  if (auto* n = leaf.get_if<NumberLeaf>()) return n->value;
  return leaf.as<ConstantLeaf>().value;
}

inline const std::string& leaf_surface(const Expr& leaf) {
  if (auto* n = leaf.get_if<NumberLeaf>()) return n->surface;
  return leaf.as<ConstantLeaf>().surface;
}

/// Returns `e` with the numeric leaf of ordinal `id` replaced.
inline Expr replace_numeric_leaf(const Expr& e, std::size_t id,
                                 const Expr& replacement) {
  std::size_t counter = 0;
  std::function<Expr(const Expr&)> walk = [&](const Expr& n) -> Expr {
    if (auto* b = n.get_if<BinaryNode>()) {
      Expr l = walk(b->left);
      Expr r = walk(b->right);
      if (&l.node() == &b->left.node() && &r.node() == &b->right.node()) {
        return n;
      }
      return Expr::binary(b->op, std::move(l), std::move(r));
    }
    if (n.is_numeric_leaf()) {
      return counter++ == id ? replacement : n;
    }
    return n;
  };
  return walk(e);
}

/// Bottom-up rewrite: `fn` receives each node after its children were mapped.
inline Expr transform(const Expr& e, const std::function<Expr(const Expr&)>& fn) {
  if (auto* b = e.get_if<BinaryNode>()) {
    Expr l = transform(b->left, fn);
    Expr r = transform(b->right, fn);
    if (&l.node() == &b->left.node() && &r.node() == &b->right.node()) {
      return fn(e);
    }
    return fn(Expr::binary(b->op, std::move(l), std::move(r)));
  }
  return fn(e);
}

/// A solved single-unknown equation "unknown = rhs".
struct Equation {
  std::string unknown = "x";
  Expr rhs;
};

inline bool operator==(const Equation& a, const Equation& b) {
  return a.unknown == b.unknown && a.rhs == b.rhs;
}

/// Surfaces that denote constants rather than problem quantities.
class ConstantTable {
 public:
  struct Entry {
    std::string surface;
    ConstantKind kind;
    Rational value;
  };

  ConstantTable() = default;
  explicit ConstantTable(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  /// pi (valued 3.14, the convention of the source datasets) and 1.
  static const ConstantTable& defaults() {
    static const ConstantTable table({
        {"pi", ConstantKind::kPi, Rational(314, 100)},
        {"\xCF\x80", ConstantKind::kPi, Rational(314, 100)},  // π
        {"PI", ConstantKind::kPi, Rational(314, 100)},
        {"1", ConstantKind::kOne, Rational(1)},
    });
    return table;
  }

  /// Builds a table from surfaces: "pi"/"π" map to pi, numerals to their
  /// value (kind one when the value is 1, unit factor otherwise).
  static std::optional<ConstantTable> from_surfaces(
      const std::vector<std::string>& surfaces) {
    std::vector<Entry> entries;
    for (const auto& s : surfaces) {
      if (s == "pi" || s == "PI" || s == "\xCF\x80") {
        entries.push_back({s, ConstantKind::kPi, Rational(314, 100)});
        continue;
      }
      auto v = parse_numeral(s);
      if (!v) return std::nullopt;
      entries.push_back({s, *v == 1 ? ConstantKind::kOne : ConstantKind::kUnitFactor, *v});
    }
    return ConstantTable(std::move(entries));
  }

  const Entry* find(std::string_view surface) const {
    for (const auto& e : entries_) {
      if (e.surface == surface) return &e;
    }
    return nullptr;
  }

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Leaf for a numeral surface, classified against the constant table.
inline Expr make_numeric_leaf(std::string surface, Rational value,
                              const ConstantTable& constants) {
  if (const auto* c = constants.find(surface)) {
    return Expr::constant(c->kind, std::move(surface), c->value);
  }
  return Expr::number(std::move(surface), std::move(value));
}

}  // namespace roda

#endif  // RODA_EXPR_HPP_
