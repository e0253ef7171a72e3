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

#ifndef RODA_NORMALIZE_HPP_
#define RODA_NORMALIZE_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "roda/error.hpp"
#include "roda/evaluate.hpp"
#include "roda/expr.hpp"
#include "roda/mentions.hpp"
#include "roda/serialize.hpp"

namespace roda {

struct SumTerm {
  bool negative = false;
  Expr term;
};
using FlatSum = std::vector<SumTerm>;

struct ProductFactor {
  bool divide = false;
  Expr factor;
};
using FlatProduct = std::vector<ProductFactor>;

/// Maps a number value to the position of its first mention in the text.
using OccurrenceIndex = std::map<Rational, std::size_t>;

inline OccurrenceIndex occurrence_index(const std::vector<NumberMention>& mentions) {
  OccurrenceIndex index;
  for (const auto& m : mentions) index.emplace(m.value, m.mention_id);
  return index;
}

/// Fallback when no text is available: every NumberLeaf value other than 0
/// and 1, ranked by value.
inline OccurrenceIndex occurrence_index(const Expr& e) {
  OccurrenceIndex index;
  for (const auto& l : numeric_leaves(e)) {
    if (!l.leaf.is<NumberLeaf>()) continue;
    const Rational& v = leaf_value(l.leaf);
    if (v != 0 && v != 1) index.emplace(v, 0);
  }
  std::size_t rank = 0;
  for (auto& [value, slot] : index) slot = rank++;
  return index;
}

struct SimplifyOptions {
  const ConstantTable* constants = &ConstantTable::defaults();
  // Terms containing this variable are never cancelled.
  std::optional<std::string> unknown;
};

// ---------------------------------------------------------------------------
// Flat forms

inline void flatten_sum_into(const Expr& e, bool negate, FlatSum& out) {
  if (const auto* b = e.get_if<BinaryNode>()) {
    if (b->op == Op::kAdd || b->op == Op::kSub) {
      flatten_sum_into(b->left, negate, out);
      flatten_sum_into(b->right, b->op == Op::kSub ? !negate : negate, out);
      return;
    }
  }
  out.push_back(SumTerm{negate, e});
}

inline FlatSum flatten_sum(const Expr& e) {
  FlatSum out;
  flatten_sum_into(e, false, out);
  return out;
}

inline void flatten_product_into(const Expr& e, bool invert, FlatProduct& out) {
  if (const auto* b = e.get_if<BinaryNode>()) {
    if (b->op == Op::kMul || b->op == Op::kDiv) {
      flatten_product_into(b->left, invert, out);
      flatten_product_into(b->right, b->op == Op::kDiv ? !invert : invert, out);
      return;
    }
  }
  out.push_back(ProductFactor{invert, e});
}

inline FlatProduct flatten_product(const Expr& e) {
  FlatProduct out;
  flatten_product_into(e, false, out);
  return out;
}

/// If the sum opens with a negative term, moves the first positive term to
/// the front. Without any positive term the sum is left as is.
inline void remove_leading_negatives(FlatSum& terms) {
  if (terms.empty() || !terms.front().negative) return;
  auto first_positive = std::find_if(terms.begin(), terms.end(),
                                     [](const SumTerm& t) { return !t.negative; });
  if (first_positive == terms.end()) return;
  SumTerm moved = *first_positive;
  terms.erase(first_positive);
  terms.insert(terms.begin(), std::move(moved));
}

/// Left-associated binary form. A sum with no positive term starts from 0.
inline Expr build_sum(FlatSum terms) {
  if (terms.empty()) return numeral(0);
  remove_leading_negatives(terms);
  Expr acc = terms.front().negative ? sub(numeral(0), terms.front().term)
                                    : terms.front().term;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    acc = terms[i].negative ? sub(acc, terms[i].term) : add(acc, terms[i].term);
  }
  return acc;
}

inline Expr build_product(FlatProduct factors,
                          const ConstantTable& constants = ConstantTable::defaults()) {
  auto first_mul = std::find_if(factors.begin(), factors.end(),
                                [](const ProductFactor& f) { return !f.divide; });
  if (first_mul == factors.end()) {
    factors.insert(factors.begin(),
                   ProductFactor{false, make_numeric_leaf("1", 1, constants)});
  } else if (first_mul != factors.begin()) {
    ProductFactor moved = *first_mul;
    factors.erase(first_mul);
    factors.insert(factors.begin(), std::move(moved));
  }
  Expr acc = factors.front().factor;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = factors[i].divide ? div(acc, factors[i].factor) : mul(acc, factors[i].factor);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// simplify

namespace detail {

inline bool is_foldable_leaf(const Expr& e) {
  if (e.is<NumberLeaf>()) return true;
  if (const auto* c = e.get_if<ConstantLeaf>()) return c->kind == ConstantKind::kOne;
  return false;
}

inline bool is_foldable(const Expr& e) {
  if (const auto* b = e.get_if<BinaryNode>()) {
    return is_foldable(b->left) && is_foldable(b->right);
  }
  return is_foldable_leaf(e);
}

inline bool is_zero_leaf(const Expr& e) {
  return is_foldable_leaf(e) && leaf_value(e) == 0;
}

inline bool is_one_leaf(const Expr& e) {
  return is_foldable_leaf(e) && leaf_value(e) == 1;
}

inline Expr value_leaf(const Rational& v, const SimplifyOptions& options) {
  return make_numeric_leaf(format_number(v), v, *options.constants);
}

inline bool cancellable(const Expr& e, const SimplifyOptions& options) {
  return !options.unknown || !contains_variable(e, *options.unknown);
}

inline Expr simplify_node(const Expr& e, const SimplifyOptions& options);

inline Expr simplify_sum(const Expr& e, const SimplifyOptions& options) {
  FlatSum terms;
  for (const auto& t : flatten_sum(e)) {
    flatten_sum_into(simplify_node(t.term, options), t.negative, terms);
  }
  std::erase_if(terms, [](const SumTerm& t) { return is_zero_leaf(t.term); });

  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].negative || !cancellable(terms[i].term, options)) continue;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (terms[j].negative && terms[j].term == terms[i].term) {
        terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
        terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
        i = static_cast<std::size_t>(-1);
        break;
      }
    }
  }

  std::vector<std::size_t> constants;
  Rational total = 0;
  bool positive_other = false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (is_foldable_leaf(terms[i].term)) {
      constants.push_back(i);
      total += terms[i].negative ? -leaf_value(terms[i].term) : leaf_value(terms[i].term);
    } else if (!terms[i].negative) {
      positive_other = true;
    }
  }
  if (constants.size() >= 2 && (total >= 0 || positive_other)) {
    FlatSum merged;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i == constants.front()) {
        if (total != 0) merged.push_back(SumTerm{total < 0, value_leaf(abs(total), options)});
      } else if (std::find(constants.begin(), constants.end(), i) == constants.end()) {
        merged.push_back(terms[i]);
      }
    }
    terms = std::move(merged);
  }
  return build_sum(std::move(terms));
}

inline Expr simplify_product(const Expr& e, const SimplifyOptions& options) {
  FlatProduct factors;
  for (const auto& f : flatten_product(e)) {
    flatten_product_into(simplify_node(f.factor, options), f.divide, factors);
  }
  for (const auto& f : factors) {
    if (f.divide && is_zero_leaf(f.factor)) throw DivisionByZero();
  }
  for (const auto& f : factors) {
    if (!f.divide && is_zero_leaf(f.factor)) return value_leaf(0, options);
  }
  std::erase_if(factors, [](const ProductFactor& f) { return is_one_leaf(f.factor); });

  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].divide || !cancellable(factors[i].factor, options)) continue;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (factors[j].divide && factors[j].factor == factors[i].factor) {
        factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
        factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
        i = static_cast<std::size_t>(-1);
        break;
      }
    }
  }

  std::vector<std::size_t> constants;
  Rational product = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (is_foldable_leaf(factors[i].factor)) {
      const Rational& v = leaf_value(factors[i].factor);
      if (factors[i].divide && v == 0) continue;
      constants.push_back(i);
      if (factors[i].divide) {
        product /= v;
      } else {
        product *= v;
      }
    }
  }
  if (constants.size() >= 2) {
    FlatProduct merged;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i == constants.front()) {
        if (product != 1) merged.push_back(ProductFactor{false, value_leaf(product, options)});
      } else if (std::find(constants.begin(), constants.end(), i) == constants.end()) {
        merged.push_back(factors[i]);
      }
    }
    factors = std::move(merged);
  }
  if (factors.empty()) return value_leaf(1, options);
  return build_product(std::move(factors), *options.constants);
}

inline Expr simplify_node(const Expr& e, const SimplifyOptions& options) {
  const auto* b = e.get_if<BinaryNode>();
  if (b == nullptr) return e;
  if (is_foldable(e)) {
    try {
      Rational v = evaluate(e);
      if (v >= 0) return value_leaf(v, options);
    } catch (const NonIntegerExponent&) {
    }
  }
  switch (b->op) {
    case Op::kAdd:
    case Op::kSub:
      return simplify_sum(e, options);
    case Op::kMul:
    case Op::kDiv:
      return simplify_product(e, options);
    case Op::kPow:
      return pow(simplify_node(b->left, options), simplify_node(b->right, options));
  }
  return e;
}

}  // namespace detail

/// Shortens an expression: folds all-constant subtrees, drops the identities
/// e*1, e/1, e+0, e-0, cancels t-t and t/t inside flat sums and products.
/// Runs to a fixpoint; the result never has more nodes than the input.
/// Slots, variables, pi and unit factors are never folded.
inline Expr simplify(const Expr& e, const SimplifyOptions& options = {}) {
  Expr current = e;
  for (int round = 0; round < 32; ++round) {
    Expr next = detail::simplify_node(current, options);
    if (next == current) return next;
    current = std::move(next);
  }
  return current;
}

// ---------------------------------------------------------------------------
// reorder

namespace detail {

struct OrderKey {
  int cls = 0;  // 0: no slot or variable inside
  std::size_t min_slot = std::numeric_limits<std::size_t>::max();
  std::string min_symbol = "\x7f";
  std::size_t size = 0;
  bool negative = false;
  std::string text;

  auto tie() const { return std::tie(cls, min_slot, min_symbol, size, negative, text); }
  bool operator<(const OrderKey& o) const { return tie() < o.tie(); }
};

inline OrderKey order_key(const Expr& e, bool negative) {
  OrderKey key;
  visit(e, [&](const Expr& n) {
    if (const auto* s = n.get_if<SlotLeaf>()) {
      key.cls = 1;
      key.min_slot = std::min(key.min_slot, s->index);
    } else if (const auto* v = n.get_if<VariableLeaf>()) {
      key.cls = 1;
      key.min_symbol = std::min(key.min_symbol, v->name);
    }
  });
  key.size = node_count(e);
  key.negative = negative;
  key.text = serialize(e);
  return key;
}

inline Expr reorder_node(const Expr& e, const ConstantTable& constants) {
  const auto* b = e.get_if<BinaryNode>();
  if (b == nullptr) return e;
  if (b->op == Op::kAdd || b->op == Op::kSub) {
    FlatSum terms = flatten_sum(e);
    std::vector<std::pair<OrderKey, SumTerm>> keyed;
    keyed.reserve(terms.size());
    for (auto& t : terms) {
      t.term = reorder_node(t.term, constants);
      keyed.emplace_back(order_key(t.term, t.negative), t);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = keyed[i].second;
    return build_sum(std::move(terms));
  }
  if (b->op == Op::kMul || b->op == Op::kDiv) {
    FlatProduct factors = flatten_product(e);
    std::vector<std::size_t> atom_positions;
    std::vector<std::pair<OrderKey, Expr>> atoms;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      factors[i].factor = reorder_node(factors[i].factor, constants);
      if (!factors[i].divide && factors[i].factor.is_leaf()) {
        atom_positions.push_back(i);
        atoms.emplace_back(order_key(factors[i].factor, false), factors[i].factor);
      }
    }
    std::stable_sort(atoms.begin(), atoms.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      factors[atom_positions[k]].factor = atoms[k].second;
    }
    return build_product(std::move(factors), constants);
  }
  return pow(reorder_node(b->left, constants), reorder_node(b->right, constants));
}

struct Templated {
  Expr expr;
  std::map<std::size_t, Expr> originals;
};

// Numbers with a text occurrence become opaque slots keyed by that
// occurrence; pi and unit factors are left alone.
inline Templated to_slots(const Expr& e, const OccurrenceIndex& occurrence) {
  Templated out;
  out.expr = transform(e, [&](const Expr& n) -> Expr {
    if (!n.is_numeric_leaf()) return n;
    if (const auto* c = n.get_if<ConstantLeaf>(); c && c->kind != ConstantKind::kOne) {
      return n;
    }
    auto it = occurrence.find(leaf_value(n));
    if (it == occurrence.end()) return n;
    out.originals.emplace(it->second, n);
    return Expr::slot(it->second);
  });
  return out;
}

inline Expr from_slots(const Expr& e, const std::map<std::size_t, Expr>& originals) {
  return transform(e, [&](const Expr& n) -> Expr {
    if (const auto* s = n.get_if<SlotLeaf>()) {
      auto it = originals.find(s->index);
      if (it != originals.end()) return it->second;
    }
    return n;
  });
}

}  // namespace detail

/// Orders terms of every sum by (constants first, first text occurrence) and
/// permutes the single-leaf multiplied factors of every product the same
/// way. Compound factors and divisors keep their positions. Value is
/// unchanged because signs and operators travel with their operands.
inline Expr reorder(const Expr& e, const OccurrenceIndex& occurrence,
                    const ConstantTable& constants = ConstantTable::defaults()) {
  auto templated = detail::to_slots(e, occurrence);
  return detail::from_slots(detail::reorder_node(templated.expr, constants),
                            templated.originals);
}

/// Applies the leading-negative fix to every sum at every bracket depth. A
/// sum spelled with a leading 0 ("0-a+1") is read as "-a+1".
inline Expr remove_leading_negatives(const Expr& e) {
  const auto* b = e.get_if<BinaryNode>();
  if (b == nullptr) return e;
  if (b->op == Op::kAdd || b->op == Op::kSub) {
    FlatSum terms = flatten_sum(e);
    for (auto& t : terms) t.term = remove_leading_negatives(t.term);
    if (terms.size() > 1 && !terms.front().negative &&
        detail::is_zero_leaf(terms.front().term) && terms[1].negative) {
      terms.erase(terms.begin());
    }
    return build_sum(std::move(terms));
  }
  return Expr::binary(b->op, remove_leading_negatives(b->left),
                      remove_leading_negatives(b->right));
}

namespace detail {

template <typename IndexOf>
Equation normalize_with(const Equation& eq, IndexOf index_of, const ConstantTable& constants) {
  SimplifyOptions options{&constants, eq.unknown};
  Expr current = eq.rhs;
  for (int round = 0; round < 16; ++round) {
    auto templated = to_slots(current, index_of(current));
    Expr n = remove_leading_negatives(reorder_node(simplify(templated.expr, options), constants));
    Expr next = from_slots(n, templated.originals);
    if (next == current) break;
    current = std::move(next);
  }
  return Equation{eq.unknown, current};
}

}  // namespace detail

/// simplify, then reorder, then remove leading negatives, repeated until
/// nothing changes. Numbers with a text occurrence are treated as opaque
/// symbols throughout, so "660/(32+34)" is not folded into its value.
inline Equation normalize(const Equation& eq, const OccurrenceIndex& occurrence,
                          const ConstantTable& constants = ConstantTable::defaults()) {
  return detail::normalize_with(
      eq, [&](const Expr&) -> const OccurrenceIndex& { return occurrence; }, constants);
}

inline Equation normalize(const Equation& eq,
                          const ConstantTable& constants = ConstantTable::defaults()) {
  return detail::normalize_with(
      eq, [](const Expr& e) { return occurrence_index(e); }, constants);
}

}  // namespace roda

#endif  // RODA_NORMALIZE_HPP_
