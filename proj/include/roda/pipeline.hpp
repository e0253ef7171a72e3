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

#ifndef RODA_PIPELINE_HPP_
#define RODA_PIPELINE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "roda/error.hpp"
#include "roda/evaluate.hpp"
#include "roda/filter.hpp"
#include "roda/inversion.hpp"
#include "roda/mentions.hpp"
#include "roda/normalize.hpp"
#include "roda/parse.hpp"
#include "roda/pronouns.hpp"
#include "roda/record.hpp"
#include "roda/serialize.hpp"
#include "roda/template.hpp"
#include "roda/transform.hpp"

namespace roda {

struct PipelineOptions {
  ConstantTable constants = ConstantTable::defaults();
  PronounTables pronouns;
  std::optional<Language> language;      // empty: detect per record
  std::optional<Rational> ratio;         // empty: keep every augmentation
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_per_problem;
  std::set<std::string> excluded_parents;  // split-aware mode
  PureArithmeticOptions arithmetic;
};

/// Counters for one augmentation run. Proportions are derived on output.
struct AugmentationStats {
  std::size_t original_problems = 0;
  std::size_t quarantined_problems = 0;
  std::size_t filtered_problems = 0;
  std::size_t no_question_problems = 0;
  std::size_t symbol_pronoun_problems = 0;
  std::size_t original_numbers = 0;
  std::size_t candidate_numbers = 0;
  std::size_t accepted_numbers = 0;
  std::map<RejectReason, std::size_t> rejections;
  std::map<RejectReason, std::size_t> unmentioned_leaves;
  std::size_t transform_failures = 0;
  std::size_t inversion_failures = 0;
  std::size_t verification_failures = 0;
  std::size_t capped = 0;
  std::size_t split_excluded = 0;
  std::size_t duplicates_removed = 0;
  std::size_t duplicate_originals = 0;
  std::size_t emitted = 0;
  std::size_t original_templates = 0;
  std::size_t augmented_templates = 0;

  std::size_t irreversible_numbers() const {
    std::size_t n = 0;
    for (const auto& [reason, count] : rejections) {
      if (reason != RejectReason::kInsignificant) n += count;
    }
    return n;
  }

  std::size_t augmented_problems() const {
    return accepted_numbers - transform_failures - inversion_failures -
           verification_failures - capped - split_excluded - duplicates_removed;
  }

  AugmentationStats& operator+=(const AugmentationStats& o) {
    original_problems += o.original_problems;
    quarantined_problems += o.quarantined_problems;
    filtered_problems += o.filtered_problems;
    no_question_problems += o.no_question_problems;
    symbol_pronoun_problems += o.symbol_pronoun_problems;
    original_numbers += o.original_numbers;
    candidate_numbers += o.candidate_numbers;
    accepted_numbers += o.accepted_numbers;
    for (const auto& [r, c] : o.rejections) rejections[r] += c;
    for (const auto& [r, c] : o.unmentioned_leaves) unmentioned_leaves[r] += c;
    transform_failures += o.transform_failures;
    inversion_failures += o.inversion_failures;
    verification_failures += o.verification_failures;
    capped += o.capped;
    split_excluded += o.split_excluded;
    duplicates_removed += o.duplicates_removed;
    duplicate_originals += o.duplicate_originals;
    emitted += o.emitted;
    original_templates += o.original_templates;
    augmented_templates += o.augmented_templates;
    return *this;
  }
};

inline constexpr const char* kStatRows[] = {
    "Original Problems", "Filtered Problems",    "Original Numbers",
    "Candidate Numbers", "Irreversible Numbers", "Augmented Problems"};

inline std::vector<std::pair<std::string, std::size_t>> table_rows(const AugmentationStats& s) {
  return {{kStatRows[0], s.original_problems},     {kStatRows[1], s.filtered_problems},
          {kStatRows[2], s.original_numbers},      {kStatRows[3], s.candidate_numbers},
          {kStatRows[4], s.irreversible_numbers()}, {kStatRows[5], s.augmented_problems()}};
}

inline double proportion(std::size_t count, std::size_t total) {
  return total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total);
}

inline Json to_json(const AugmentationStats& s) {
  Json j;
  Json props;
  for (const auto& [name, count] : table_rows(s)) {
    j[name] = count;
    if (name != kStatRows[0]) props[name] = proportion(count, s.original_problems);
  }
  j["proportions"] = props;
  Json rej = Json::object();
  Json leaves = Json::object();
  for (RejectReason r : kAllReasons) {
    auto it = s.rejections.find(r);
    rej[std::string(reason_code(r))] = it == s.rejections.end() ? 0 : it->second;
    auto jt = s.unmentioned_leaves.find(r);
    leaves[std::string(reason_code(r))] = jt == s.unmentioned_leaves.end() ? 0 : jt->second;
  }
  j["rejections"] = rej;
  j["unmentioned_leaves"] = leaves;
  j["accepted_numbers"] = s.accepted_numbers;
  j["quarantined_problems"] = s.quarantined_problems;
  j["no_question_problems"] = s.no_question_problems;
  j["symbol_pronoun_problems"] = s.symbol_pronoun_problems;
  j["failures"] = {{"transform", s.transform_failures},
                   {"inversion", s.inversion_failures},
                   {"verification", s.verification_failures}};
  j["capped"] = s.capped;
  j["split_excluded"] = s.split_excluded;
  j["duplicates_removed"] = s.duplicates_removed;
  j["duplicate_originals"] = s.duplicate_originals;
  j["emitted"] = s.emitted;
  j["distinct_templates"] = {{"original", s.original_templates},
                             {"augmented", s.augmented_templates}};
  return j;
}

/// Plain-text rendering of the statistics table.
inline std::string render_table(const Json& stats) {
  std::ostringstream os;
  os << std::left << std::setw(22) << "Type" << std::setw(10) << "#" << "Prop.\n";
  std::size_t total = stats.value(kStatRows[0], std::size_t{0});
  for (const char* name : kStatRows) {
    std::size_t count = stats.value(name, std::size_t{0});
    os << std::left << std::setw(22) << name << std::setw(10) << count;
    if (std::string(name) == kStatRows[0]) {
      os << "-";
    } else {
      os << std::fixed << std::setprecision(2) << proportion(count, total);
    }
    os << '\n';
  }
  if (stats.contains("rejections")) {
    os << "\nRejections\n";
    for (auto it = stats["rejections"].begin(); it != stats["rejections"].end(); ++it) {
      os << "  " << std::left << std::setw(20) << it.key() << it.value().get<std::size_t>()
         << '\n';
    }
  }
  return os.str();
}

inline std::string render_table(const AugmentationStats& s) { return render_table(to_json(s)); }

// ---------------------------------------------------------------------------
// Record preparation

/// A record that passed the quarantine check.
struct PreparedRecord {
  MwpRecord record;
  Equation equation;
  Rational value;
  std::vector<NumberMention> mentions;
};

struct QuarantineEntry {
  std::string id;
  std::string reason;
};

namespace detail {

inline std::size_t fraction_digits(std::string_view surface) {
  auto dot = surface.find('.');
  if (dot == std::string_view::npos) return 0;
  std::size_t n = 0;
  for (std::size_t i = dot + 1; i < surface.size() && surface[i] >= '0' && surface[i] <= '9'; ++i) {
    ++n;
  }
  return n;
}

// A long decimal answer is a rounded rendering of the exact value.
inline bool answers_agree(const Rational& stored, std::string_view surface,
                          const Rational& exact) {
  if (stored == exact) return true;
  if (fraction_digits(surface) < 6) return false;
  Rational diff = stored - exact;
  if (diff < 0) diff = -diff;
  Rational scale = exact < 0 ? Rational(-exact) : exact;
  if (scale < 1) scale = 1;
  return diff <= scale / 10000;
}

}  // namespace detail

/// Parses and evaluates a record; the evaluated value is authoritative and a
/// stored answer that disagrees with it quarantines the record.
inline std::variant<PreparedRecord, QuarantineEntry> prepare_record(
    const MwpRecord& record, const PipelineOptions& options) {
  ParseOptions po;
  po.constants = &options.constants;
  PreparedRecord out;
  out.record = record;
  try {
    out.equation = parse_equation(record.equation_text, po);
  } catch (const Error& e) {
    return QuarantineEntry{record.id, std::string("equation: ") + e.what()};
  }
  try {
    out.value = evaluate(out.equation.rhs);
  } catch (const Error& e) {
    return QuarantineEntry{record.id, std::string("evaluation: ") + e.what()};
  }
  std::optional<Rational> stored;
  try {
    stored = evaluate(parse_expression(record.answer_surface, po));
  } catch (const Error&) {
  }
  if (!stored) return QuarantineEntry{record.id, "answer: unparsable " + record.answer_surface};
  if (!detail::answers_agree(*stored, record.answer_surface, out.value)) {
    return QuarantineEntry{record.id, "answer: " + record.answer_surface +
                                          " disagrees with equation value " +
                                          format_number(out.value)};
  }
  out.mentions = find_number_mentions(record.text, record.language);
  return out;
}

// ---------------------------------------------------------------------------
// Verification

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string why) {
    ok = false;
    failures.push_back(std::move(why));
  }
};

inline VerifyReport verify_report(const AugmentedRecord& aug, const MwpRecord& parent,
                                  const PipelineOptions& options = {}) {
  VerifyReport report;
  ParseOptions po;
  po.constants = &options.constants;

  std::optional<Rational> parent_value;
  std::vector<NumberMention> parent_mentions;
  try {
    parent_value = evaluate(parse_equation(parent.equation_text, po).rhs);
    parent_mentions = find_number_mentions(parent.text, parent.language);
  } catch (const Error& e) {
    report.fail(std::string("parent: ") + e.what());
    return report;
  }

  const NumberMention* target = nullptr;
  for (const auto& m : parent_mentions) {
    if (m.begin == aug.target_mention.begin && m.end == aug.target_mention.end) target = &m;
  }
  if (target == nullptr || target->value != aug.target_mention.value) {
    report.fail("target span does not match a parent number");
    return report;
  }
  if (aug.answer_value != target->value) report.fail("answer differs from target value");

  try {
    Equation eq = parse_equation(aug.equation_text, po);
    for (Op op : operators(eq.rhs)) {
      if (op == Op::kPow) report.fail("equation uses a power");
    }
    if (evaluate(eq.rhs) != target->value) report.fail("equation value differs from target");
    auto mentions = find_number_mentions(aug.text, aug.language);
    if (serialize(normalize(eq, occurrence_index(mentions), options.constants)) !=
        aug.equation_text) {
      report.fail("equation is not in normal form");
    }
  } catch (const Error& e) {
    report.fail(std::string("equation: ") + e.what());
  }

  const PronounTable& table = options.pronouns.for_language(aug.language);
  auto units = segment_discourse(aug.text, aug.language);
  if (units.empty() || count_question_units(units, table) != 1 ||
      !match_pronoun(units.back(), true, table)) {
    report.fail("text does not end in exactly one question");
  }
  std::string answer = format_number(*parent_value);
  if (aug.text.find(answer) == std::string::npos) report.fail("answer surface missing");

  std::multiset<Rational> expected;
  for (const auto& m : parent_mentions) expected.insert(m.value);
  expected.erase(expected.find(target->value));
  expected.insert(*parent_value);
  std::multiset<Rational> actual;
  for (const auto& m : find_number_mentions(aug.text, aug.language)) actual.insert(m.value);
  if (expected != actual) report.fail("numbers not conserved");
  return report;
}

inline bool verify(const AugmentedRecord& aug, const MwpRecord& parent,
                   const PipelineOptions& options = {}) {
  return verify_report(aug, parent, options).ok;
}

// ---------------------------------------------------------------------------
// Augmentation

namespace detail {

inline std::optional<std::string> template_key(const Equation& eq,
                                               const std::vector<NumberMention>& mentions) {
  try {
    return serialize(templatize(eq, mentions));
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline bool is_symbol_pronoun(std::string_view pattern) {
  return pattern == "=" || pattern == "((())/(()))";
}

}  // namespace detail

/// Reverses every accepted number of one prepared record. Failures are
/// counted in `stats` and never abort the record.
inline std::vector<AugmentedRecord> augment_record(const PreparedRecord& prepared,
                                                   const PipelineOptions& options,
                                                   AugmentationStats& stats) {
  std::vector<AugmentedRecord> out;
  const MwpRecord& record = prepared.record;
  auto candidates = align_and_filter(prepared.mentions, prepared.equation);
  std::size_t significant = 0;
  for (const auto& c : candidates) {
    if (c.mention && c.reason != RejectReason::kInsignificant) ++significant;
  }
  stats.original_numbers += significant;
  if (is_pure_arithmetic(record.text, record.language, options.arithmetic)) {
    ++stats.filtered_problems;
    return out;
  }
  stats.candidate_numbers += significant;
  std::vector<const Candidate*> accepted;
  for (const auto& c : candidates) {
    if (!c.mention) {
      ++stats.unmentioned_leaves[*c.reason];
    } else if (c.reason) {
      ++stats.rejections[*c.reason];
    } else {
      accepted.push_back(&c);
    }
  }
  stats.accepted_numbers += accepted.size();
  if (accepted.empty()) return out;

  const PronounTable& table = options.pronouns.for_language(record.language);
  auto units = segment_discourse(record.text, record.language);
  try {
    auto q = locate_question(units, table);
    if (detail::is_symbol_pronoun(q.match.entry->pattern)) ++stats.symbol_pronoun_problems;
  } catch (const TransformError&) {
    ++stats.no_question_problems;
    stats.transform_failures += accepted.size();
    return out;
  }

  std::string answer = format_number(prepared.value);
  for (const Candidate* c : accepted) {
    const NumberMention& m = *c->mention;
    TransformResult tr;
    try {
      tr = transform_problem(record.text, record.language, m, answer, table);
    } catch (const Error&) {
      ++stats.transform_failures;
      continue;
    }
    InversionResult inv;
    try {
      inv = invert(prepared.equation, *c->leaf_id, prepared.value);
    } catch (const Error&) {
      ++stats.inversion_failures;
      continue;
    }
    AugmentedRecord aug;
    aug.parent_id = record.id;
    aug.id = record.id + "#" + std::to_string(m.mention_id);
    aug.text = tr.text;
    aug.language = record.language;
    aug.segmented = record.segmented_text.has_value();
    aug.answer_surface = m.surface;
    aug.answer_value = m.value;
    aug.target_mention = m;
    aug.provenance.pronoun = tr.pronoun;
    aug.provenance.question_unit = tr.question_unit;
    aug.provenance.declarative_unit = tr.declarative_unit;
    for (ReversionRule r : inv.trace) aug.provenance.rule_trace.emplace_back(rule_name(r));
    try {
      auto new_mentions = find_number_mentions(aug.text, aug.language);
      aug.equation_text =
          serialize(normalize(inv.equation, occurrence_index(new_mentions), options.constants));
    } catch (const Error&) {
      ++stats.inversion_failures;
      continue;
    }
    if (!verify(aug, record, options)) {
      ++stats.verification_failures;
      continue;
    }
    if (options.max_per_problem && out.size() >= *options.max_per_problem) {
      ++stats.capped;
      continue;
    }
    out.push_back(std::move(aug));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sampling

/// Deterministic 64-bit generator with a portable bounded draw.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

 private:
  std::mt19937_64 engine_;
};

template <typename T>
void seeded_shuffle(std::vector<T>& items, std::uint64_t seed) {
  SeededRng rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

/// k distinct indices of [0, n), returned in increasing order.
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k,
                                               std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  seeded_shuffle(idx, seed);
  idx.resize(std::min(k, n));
  std::sort(idx.begin(), idx.end());
  return idx;
}

/// Number of augmented records to keep for `ratio` (augmented : original).
inline std::size_t sample_size(const Rational& ratio, std::size_t originals) {
  Rational k = ratio * Rational(static_cast<long long>(originals));
  Integer whole = numerator(k) / denominator(k);
  return static_cast<std::size_t>(whole.convert_to<unsigned long long>());
}

/// Concatenates both sets and applies a seeded shuffle.
template <typename T>
std::vector<T> shuffle_mix(std::vector<T> original, const std::vector<T>& augmented,
                           std::uint64_t seed) {
  original.insert(original.end(), augmented.begin(), augmented.end());
  seeded_shuffle(original, seed);
  return original;
}

// ---------------------------------------------------------------------------
// Dataset

struct DatasetResult {
  std::vector<MwpRecord> originals;  // valid and distinct input records
  std::vector<AugmentedRecord> augmented;
  std::vector<QuarantineEntry> quarantined;
  AugmentationStats stats;
};

namespace detail {

inline std::string collapse_spaces(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : trim(s)) {
    if (is_ascii_space(c)) {
      space = true;
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

}  // namespace detail

inline DatasetResult augment_records(const std::vector<Json>& input,
                                     const PipelineOptions& options) {
  DatasetResult result;
  AugmentationStats& stats = result.stats;
  std::set<std::pair<std::string, std::string>> seen;
  std::set<std::string> original_templates;
  std::set<std::string> augmented_templates;
  std::vector<AugmentedRecord> all;

  for (std::size_t i = 0; i < input.size(); ++i) {
    ++stats.original_problems;
    MwpRecord record;
    try {
      record = record_from_json(input[i], options.language);
    } catch (const std::exception& e) {
      ++stats.quarantined_problems;
      std::string id = input[i].is_object() && input[i].contains("id")
                           ? detail::scalar_text(input[i]["id"])
                           : "#" + std::to_string(i);
      result.quarantined.push_back({id, std::string("record: ") + e.what()});
      continue;
    }
    auto prepared = prepare_record(record, options);
    if (auto* q = std::get_if<QuarantineEntry>(&prepared)) {
      ++stats.quarantined_problems;
      result.quarantined.push_back(*q);
      continue;
    }
    const auto& p = std::get<PreparedRecord>(prepared);
    if (seen.emplace(detail::collapse_spaces(record.text), serialize(p.equation)).second) {
      result.originals.push_back(record);
    } else {
      ++stats.duplicate_originals;
    }
    if (auto key = detail::template_key(p.equation, p.mentions)) original_templates.insert(*key);

    for (auto& aug : augment_record(p, options, stats)) {
      if (options.excluded_parents.count(aug.parent_id) != 0) {
        ++stats.split_excluded;
        continue;
      }
      if (!seen.emplace(detail::collapse_spaces(aug.text), aug.equation_text).second) {
        ++stats.duplicates_removed;
        continue;
      }
      all.push_back(std::move(aug));
    }
  }

  if (options.ratio) {
    std::size_t k = sample_size(*options.ratio, stats.original_problems);
    for (std::size_t i : sample_indices(all.size(), k, options.seed)) {
      result.augmented.push_back(all[i]);
    }
  } else {
    result.augmented = std::move(all);
  }
  for (const auto& aug : result.augmented) {
    ParseOptions po;
    po.constants = &options.constants;
    auto key = detail::template_key(parse_equation(aug.equation_text, po),
                                    find_number_mentions(aug.text, aug.language));
    if (key) augmented_templates.insert(*key);
  }
  stats.emitted = result.augmented.size();
  stats.original_templates = original_templates.size();
  stats.augmented_templates = augmented_templates.size();
  return result;
}

inline DatasetResult augment_dataset(const std::string& input_path,
                                     const PipelineOptions& options) {
  return augment_records(read_json_file(input_path), options);
}

/// Output records: the augmented set alone, or mixed with the originals.
inline Json output_json(const DatasetResult& result, bool mix, std::uint64_t seed) {
  std::vector<Json> aug;
  aug.reserve(result.augmented.size());
  for (const auto& a : result.augmented) aug.push_back(to_json(a));
  if (!mix) return Json(aug);
  std::vector<Json> orig;
  orig.reserve(result.originals.size());
  for (const auto& o : result.originals) orig.push_back(to_json(o));
  return Json(shuffle_mix(std::move(orig), aug, seed));
}

}  // namespace roda

#endif  // RODA_PIPELINE_HPP_
