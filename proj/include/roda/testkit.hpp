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

#ifndef RODA_TESTKIT_HPP_
#define RODA_TESTKIT_HPP_

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "roda/evaluate.hpp"
#include "roda/expr.hpp"
#include "roda/filter.hpp"
#include "roda/inversion.hpp"
#include "roda/normalize.hpp"
#include "roda/pipeline.hpp"
#include "roda/record.hpp"
#include "roda/serialize.hpp"

namespace roda::testkit {

/// Random equation generator. Leaves are small integers and simple
/// fractions; trees with a zero-valued subtree or a negative value are
/// regenerated.
struct ExprGenerator {
  std::size_t max_depth = 6;
  std::map<Op, double> op_weights = {
      {Op::kAdd, 1.0}, {Op::kSub, 1.0}, {Op::kMul, 1.0}, {Op::kDiv, 1.0}};
  Rational leaf_min = 2;
  Rational leaf_max = 60;
  std::uint64_t seed = 0;
  double leaf_probability = 0.3;
  bool distinct_leaves = true;

  SeededRng rng{0};

  ExprGenerator() = default;
  explicit ExprGenerator(std::uint64_t s) : seed(s), rng(s) {}

  void reseed(std::uint64_t s) {
    seed = s;
    rng = SeededRng(s);
  }

  double unit() {
    return static_cast<double>(rng.below(1u << 30)) / static_cast<double>(1u << 30);
  }

  Rational leaf_value(const std::set<Rational>& used) {
    static constexpr int kDenominators[] = {1, 1, 1, 1, 2, 4, 5};
    for (int attempt = 0; attempt < 256; ++attempt) {
      int den = kDenominators[rng.below(std::size(kDenominators))];
      Rational lo = leaf_min * den;
      Rational hi = leaf_max * den;
      Integer a = numerator(lo) / denominator(lo);
      if (a * denominator(lo) < numerator(lo)) a += 1;
      Integer b = numerator(hi) / denominator(hi);
      if (b < a) continue;
      auto span = static_cast<std::uint64_t>((b - a + 1).convert_to<unsigned long long>());
      Rational v(a + Integer(rng.below(span)), Integer(den));
      if (v == 0 || v == 1) continue;
      if (distinct_leaves && used.count(v) != 0) continue;
      return v;
    }
    return leaf_max + static_cast<long long>(used.size()) + 1;
  }

  Op pick_op() {
    double total = 0;
    for (const auto& [op, w] : op_weights) total += w;
    double r = unit() * total;
    for (const auto& [op, w] : op_weights) {
      if (r < w) return op;
      r -= w;
    }
    return op_weights.rbegin()->first;
  }

  Expr build(std::size_t remaining, bool root, std::set<Rational>& used) {
    if (remaining == 0 || (!root && unit() < leaf_probability)) {
      Rational v = leaf_value(used);
      used.insert(v);
      return numeral(v);
    }
    Op op = pick_op();
    if (op == Op::kPow) {
      Expr base = build(remaining - 1, false, used);
      Rational exponent = 2 + static_cast<long long>(rng.below(2));
      while (distinct_leaves && used.count(exponent) != 0) exponent += 1;
      used.insert(exponent);
      return pow(base, numeral(exponent));
    }
    Expr left = build(remaining - 1, false, used);
    Expr right = build(remaining - 1, false, used);
    return Expr::binary(op, left, right);
  }

  // Value of `e`, or nothing when some subtree is zero or undefined.
  static std::optional<Rational> nonzero_value(const Expr& e) {
    const auto* b = e.get_if<BinaryNode>();
    if (b == nullptr) return leaf_value_of(e);
    auto l = nonzero_value(b->left);
    if (!l) return std::nullopt;
    auto r = nonzero_value(b->right);
    if (!r) return std::nullopt;
    Rational v;
    switch (b->op) {
      case Op::kAdd: v = *l + *r; break;
      case Op::kSub: v = *l - *r; break;
      case Op::kMul: v = *l * *r; break;
      case Op::kDiv: v = *l / *r; break;
      case Op::kPow:
        try {
          v = detail::integer_power(*l, *r);
        } catch (const Error&) {
          return std::nullopt;
        }
        break;
    }
    if (v == 0) return std::nullopt;
    return v;
  }

  static Rational leaf_value_of(const Expr& e) { return roda::leaf_value(e); }

  static bool acceptable(const Expr& e) {
    auto v = nonzero_value(e);
    return v && *v > 0;
  }
};

inline Equation gen_equation(ExprGenerator& g) {
  while (true) {
    std::set<Rational> used;
    Expr e = g.build(g.max_depth, true, used);
    if (ExprGenerator::acceptable(e)) return Equation{"x", e};
  }
}

/// Random expressions over a few symbols and small numerals, for checking
/// that normalization preserves value.
struct SymbolicGenerator {
  std::vector<std::string> symbols = {"a", "b", "c", "d"};
  std::size_t max_depth = 4;
  double numeral_probability = 0.25;
  SeededRng rng{0};

  explicit SymbolicGenerator(std::uint64_t seed = 0) : rng(seed) {}

  Expr leaf() {
    if (static_cast<double>(rng.below(1000)) / 1000.0 < numeral_probability) {
      return numeral(Rational(static_cast<long long>(rng.below(9) + 1)));
    }
    return Expr::variable(symbols[rng.below(symbols.size())]);
  }

  Expr build(std::size_t remaining) {
    if (remaining == 0 || rng.below(4) == 0) return leaf();
    static constexpr Op kOps[] = {Op::kAdd, Op::kSub, Op::kMul, Op::kDiv};
    Op op = kOps[rng.below(4)];
    return Expr::binary(op, build(remaining - 1), build(remaining - 1));
  }

  Equation equation() { return Equation{"x", Expr::binary(Op::kAdd, build(max_depth - 1),
                                                          build(max_depth - 1))}; }

  /// Nonzero values in [-20, 20], some of them fractional.
  Bindings bindings() {
    Bindings b;
    for (const auto& s : symbols) {
      long long n = static_cast<long long>(rng.below(40)) - 20;
      if (n >= 0) ++n;
      long long d = rng.below(3) == 0 ? static_cast<long long>(rng.below(4) + 2) : 1;
      b[s] = Rational(n) / Rational(d);
    }
    return b;
  }
};

struct Mismatch {
  std::string equation;
  std::size_t leaf_id = 0;
  std::string expected;
  std::string got;
  std::string inverted;
  std::vector<std::string> trace;
};

struct OracleReport {
  std::size_t trials = 0;
  std::size_t leaves_checked = 0;
  std::map<RejectReason, std::size_t> skipped;
  std::map<InversionError::Kind, std::size_t> inversion_errors;
  std::array<std::size_t, kReversionRuleCount> branches{};
  std::vector<Mismatch> mismatches;
  double seconds = 0;

  OracleReport& operator+=(const OracleReport& o) {
    trials += o.trials;
    leaves_checked += o.leaves_checked;
    for (const auto& [r, c] : o.skipped) skipped[r] += c;
    for (const auto& [k, c] : o.inversion_errors) inversion_errors[k] += c;
    for (std::size_t i = 0; i < kReversionRuleCount; ++i) branches[i] += o.branches[i];
    mismatches.insert(mismatches.end(), o.mismatches.begin(), o.mismatches.end());
    return *this;
  }

  std::size_t min_branch() const {
    return *std::min_element(branches.begin(), branches.end());
  }
};

/// Plain text standing in for a problem: every numeric leaf is mentioned
/// once, in leaf order.
inline std::string synthetic_text(const Equation& eq) {
  std::string text;
  for (const auto& l : numeric_leaves(eq.rhs)) {
    if (!l.leaf.is<NumberLeaf>()) continue;
    if (!text.empty()) text += " and ";
    text += leaf_surface(l.leaf);
  }
  return text;
}

/// Inverts the equation on every filter-accepted leaf, normalizes, and
/// checks that the result evaluates to that leaf's value exactly.
inline OracleReport oracle_invert_check(const Equation& eq) {
  OracleReport report;
  report.trials = 1;
  std::string text = synthetic_text(eq);
  Rational answer = evaluate(eq.rhs);
  for (const auto& c : align_and_filter(text, Language::kEn, eq)) {
    if (c.reason) {
      ++report.skipped[*c.reason];
      continue;
    }
    ++report.leaves_checked;
    const Rational& target = c.mention->value;
    Mismatch m{serialize(eq), *c.leaf_id, format_number(target), "", "", {}};
    try {
      InversionResult inv = invert(eq, *c.leaf_id, answer);
      for (ReversionRule r : inv.trace) {
        ++report.branches[static_cast<std::size_t>(r)];
        m.trace.emplace_back(rule_name(r));
      }
      m.inverted = serialize(inv.equation);
      Rational raw = evaluate(inv.equation.rhs);
      Equation norm = normalize(inv.equation);
      Rational normalized = evaluate(norm.rhs);
      if (raw != target || normalized != target) {
        m.got = format_number(raw) + " / normalized " + format_number(normalized) + " (" +
                serialize(norm) + ")";
        report.mismatches.push_back(m);
      }
    } catch (const InversionError& e) {
      ++report.inversion_errors[e.kind()];
      m.got = std::string("error: ") + e.what();
      report.mismatches.push_back(m);
    } catch (const Error& e) {
      m.got = std::string("error: ") + e.what();
      report.mismatches.push_back(m);
    }
  }
  return report;
}

/// Runs `trials` generated equations, split across `threads` workers. Trial
/// i always uses seed `seed + i`, so the merged report is independent of
/// the thread count.
inline OracleReport run_oracle(const ExprGenerator& config, std::size_t trials,
                               unsigned threads = 0) {
  auto start = std::chrono::steady_clock::now();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));
  std::vector<OracleReport> parts(threads);
  auto work = [&](unsigned w) {
    ExprGenerator g = config;
    for (std::size_t i = w; i < trials; i += threads) {
      g.reseed(config.seed + i);
      parts[w] += oracle_invert_check(gen_equation(g));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  OracleReport total;
  for (const auto& p : parts) total += p;
  total.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

inline Json to_json(const OracleReport& r) {
  Json j;
  j["trials"] = r.trials;
  j["leaves_checked"] = r.leaves_checked;
  Json skipped = Json::object();
  for (const auto& [reason, count] : r.skipped) skipped[std::string(reason_code(reason))] = count;
  j["skipped"] = skipped;
  Json branches = Json::object();
  for (std::size_t i = 0; i < kReversionRuleCount; ++i) {
    branches[std::string(rule_name(static_cast<ReversionRule>(i)))] = r.branches[i];
  }
  j["branches"] = branches;
  Json mism = Json::array();
  for (const auto& m : r.mismatches) {
    mism.push_back({{"equation", m.equation},
                    {"leaf_id", m.leaf_id},
                    {"expected", m.expected},
                    {"got", m.got},
                    {"inverted", m.inverted},
                    {"trace", m.trace}});
  }
  j["mismatches"] = mism;
  j["seconds"] = r.seconds;
  return j;
}

}  // namespace roda::testkit

#endif  // RODA_TESTKIT_HPP_
