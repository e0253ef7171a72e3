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

#ifndef RODA_TOOLS_CLI_HPP_
#define RODA_TOOLS_CLI_HPP_

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "roda/roda.hpp"

namespace roda::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Failure carrying a reason code (R1_TEXT_DUP, ...) for the error summary.
class CodedError : public Error {
 public:
  CodedError(std::string code, const std::string& message)
      : Error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct RunOptions {
  std::string input_path;
  std::string output_path;
  std::string stats_path;
  std::string language = "auto";
  std::string ratio = "all";
  std::uint64_t seed = 0;
  std::string max_per_problem = "unlimited";
  std::string pronoun_table_path;
  std::vector<std::string> constant_list;
  std::string exclude_parents_path;
  std::string quarantine_path;
  bool mix = false;
};

/// "all" -> nothing; "r", "p/q" -> r; "a:b" (original : augmented) -> b/a.
inline std::optional<Rational> parse_ratio(const std::string& text) {
  if (text == "all") return std::nullopt;
  std::optional<Rational> r;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    auto a = parse_rational(text.substr(0, colon));
    auto b = parse_rational(text.substr(colon + 1));
    if (a && b && *a > 0) r = *b / *a;
  } else {
    r = parse_rational(text);
  }
  if (!r || *r <= 0) throw UsageError("ratio must be positive or \"all\": " + text);
  return r;
}

inline std::optional<Language> parse_language(const std::string& text) {
  if (text == "auto") return std::nullopt;
  if (text == "zh") return Language::kZh;
  if (text == "en") return Language::kEn;
  throw UsageError("language must be zh, en or auto: " + text);
}

inline ConstantTable parse_constants(const std::vector<std::string>& surfaces) {
  if (surfaces.empty()) return ConstantTable::defaults();
  auto table = ConstantTable::from_surfaces(surfaces);
  if (!table) throw UsageError("constants must be pi or numerals");
  return *table;
}

inline PipelineOptions pipeline_options(const RunOptions& run) {
  PipelineOptions o;
  o.constants = parse_constants(run.constant_list);
  o.language = parse_language(run.language);
  o.ratio = parse_ratio(run.ratio);
  o.seed = run.seed;
  if (run.max_per_problem != "unlimited") {
    auto v = parse_numeral(run.max_per_problem);
    if (!v || !is_integer(*v) || *v < 0) {
      throw UsageError("max-per-problem must be an integer or \"unlimited\"");
    }
    o.max_per_problem = static_cast<std::size_t>(numerator(*v).convert_to<unsigned long long>());
  }
  if (!run.pronoun_table_path.empty()) o.pronouns = PronounTables::load(run.pronoun_table_path);
  if (!run.exclude_parents_path.empty()) {
    std::ifstream f(run.exclude_parents_path);
    if (!f) throw IoError("cannot read " + run.exclude_parents_path);
    for (std::string line; std::getline(f, line);) {
      auto id = trim(line);
      if (!id.empty()) o.excluded_parents.emplace(id);
    }
  }
  return o;
}

inline int cmd_augment(const RunOptions& run, bool json, std::ostream& out) {
  PipelineOptions options = pipeline_options(run);
  DatasetResult result = augment_dataset(run.input_path, options);
  write_json_file(run.output_path, output_json(result, run.mix, run.seed));
  Json stats = to_json(result.stats);
  std::string stats_path = run.stats_path.empty() ? run.output_path + ".stats.json" : run.stats_path;
  write_json_file(stats_path, stats);
  if (!run.quarantine_path.empty()) {
    Json q = Json::array();
    for (const auto& e : result.quarantined) q.push_back({{"id", e.id}, {"reason", e.reason}});
    write_json_file(run.quarantine_path, q);
  }
  if (json) {
    out << Json{{"output", run.output_path}, {"stats_path", stats_path}, {"stats", stats}}.dump()
        << '\n';
  } else {
    out << render_table(stats);
  }
  return kExitOk;
}

struct InvertRequest {
  std::string equation;
  std::string target;
  std::string answer;
  std::string text;
};

inline std::size_t choose_leaf(const Equation& eq, const Rational& target,
                               const std::string& text) {
  if (!text.empty()) {
    auto lang = detect_language(text);
    for (const auto& c : align_and_filter(text, lang, eq)) {
      if (!c.mention || c.mention->value != target) continue;
      if (c.reason) {
        throw CodedError(std::string(reason_code(*c.reason)),
                         "target " + c.mention->surface + " is not reversible");
      }
      return *c.leaf_id;
    }
    throw CodedError("UNALIGNED", "target does not appear in the text");
  }
  std::vector<LeafInfo> matches;
  for (const auto& l : numeric_leaves(eq.rhs)) {
    if (leaf_value(l.leaf) == target) matches.push_back(l);
  }
  if (matches.empty()) throw CodedError("UNALIGNED", "no equation number has that value");
  if (matches.size() > 1) throw CodedError("R2_EQ_DUP", "target value occurs more than once");
  if (matches.front().under_power) throw CodedError("R3_POWER", "target sits under a power");
  if (matches.front().leaf.is<ConstantLeaf>()) {
    throw CodedError("R4_CONSTANT", "target is a constant");
  }
  return matches.front().id;
}

inline Rational require_number(const std::string& text, const char* what) {
  auto v = parse_rational(text);
  if (!v) throw UsageError(std::string(what) + " is not a number: " + text);
  return *v;
}

inline int cmd_invert(const InvertRequest& req, bool json, std::ostream& out) {
  Equation eq = parse_equation(req.equation);
  Rational target = require_number(req.target, "target");
  Rational answer = require_number(req.answer, "answer");
  std::size_t leaf = choose_leaf(eq, target, req.text);
  InversionResult inv = invert(eq, leaf, answer);
  Equation norm = normalize(inv.equation);
  Rational value = evaluate(norm.rhs);
  std::string text = serialize(norm);
  if (json) {
    std::vector<std::string> trace;
    for (ReversionRule r : inv.trace) trace.emplace_back(rule_name(r));
    out << Json{{"equation", text},
                {"unnormalized", serialize(inv.equation)},
                {"trace", trace},
                {"value", format_number(value)},
                {"verified", value == target}}
               .dump()
        << '\n';
  } else {
    out << text << '\n';
  }
  return kExitOk;
}

inline int cmd_normalize(const std::string& equation, const std::string& text, bool json,
                         std::ostream& out) {
  ParseOptions po;
  po.allow_symbols = true;
  Equation eq = parse_equation(equation, po);
  Equation norm = text.empty()
                      ? normalize(eq)
                      : normalize(eq, occurrence_index(find_number_mentions(
                                          text, detect_language(text))));
  if (json) {
    out << Json{{"input", equation}, {"equation", serialize(norm)}}.dump() << '\n';
  } else {
    out << serialize(norm) << '\n';
  }
  return kExitOk;
}

inline int cmd_verify(const std::string& pairs_path, const std::string& originals_path,
                      const RunOptions& run, bool json, std::ostream& out) {
  PipelineOptions options;
  options.constants = parse_constants(run.constant_list);
  if (!run.pronoun_table_path.empty()) {
    options.pronouns = PronounTables::load(run.pronoun_table_path);
  }
  auto language = parse_language(run.language);
  std::map<std::string, MwpRecord> parents;
  if (!originals_path.empty()) {
    for (const auto& j : read_json_file(originals_path)) {
      try {
        auto r = record_from_json(j, language);
        parents.emplace(r.id, r);
      } catch (const std::exception&) {
      }
    }
  }
  std::size_t total = 0, passed = 0;
  Json results = Json::array();
  for (const auto& j : read_json_file(pairs_path)) {
    Json aug_json = j.contains("augmented") ? j.at("augmented") : j;
    if (!aug_json.contains("parent_id")) continue;
    ++total;
    VerifyReport report;
    std::string id = aug_json.value("id", std::string());
    try {
      AugmentedRecord aug = augmented_from_json(aug_json);
      std::optional<MwpRecord> parent;
      if (j.contains("original")) {
        parent = record_from_json(j.at("original"), language);
      } else if (auto it = parents.find(aug.parent_id); it != parents.end()) {
        parent = it->second;
      }
      if (!parent) {
        report.fail("parent " + aug.parent_id + " not found");
      } else {
        report = verify_report(aug, *parent, options);
      }
    } catch (const std::exception& e) {
      report.fail(e.what());
    }
    if (report.ok) ++passed;
    results.push_back({{"id", id}, {"pass", report.ok}, {"failures", report.failures}});
    if (!json) {
      out << (report.ok ? "PASS " : "FAIL ") << id;
      for (const auto& f : report.failures) out << " | " << f;
      out << '\n';
    }
  }
  double rate = total == 0 ? 1.0 : static_cast<double>(passed) / static_cast<double>(total);
  if (json) {
    out << Json{{"total", total}, {"passed", passed}, {"rate", rate}, {"results", results}}.dump()
        << '\n';
  } else {
    std::ostringstream r;
    r.precision(4);
    r << std::fixed << rate * 100;
    out << passed << "/" << total << " passed (" << r.str() << "%)\n";
  }
  return passed == total ? kExitOk : kExitRuntime;
}

inline int cmd_stats(const std::string& path, bool json, std::ostream& out) {
  auto values = read_json_file(path);
  if (values.size() != 1 || !values.front().is_object() ||
      !values.front().contains("Original Problems")) {
    throw IoError(path + " is not a statistics file");
  }
  if (json) {
    out << values.front().dump() << '\n';
  } else {
    out << render_table(values.front());
  }
  return kExitOk;
}

inline void report_error(std::ostream& err, const std::string& kind, const std::string& message,
                         const std::string& code = {}) {
  Json j{{"error", kind}, {"message", message}};
  if (!code.empty()) j["code"] = code;
  err << j.dump() << '\n';
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reverse-operation data augmentation for math word problems", "roda"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  RunOptions run_options;
  auto* augment = app.add_subcommand("augment", "Augment a dataset");
  augment->add_option("--input", run_options.input_path, "Input records")->required();
  augment->add_option("--output", run_options.output_path, "Output records")->required();
  augment->add_option("--stats", run_options.stats_path,
                      "Statistics file (default: <output>.stats.json)");
  augment->add_option("--language", run_options.language, "zh, en or auto")
      ->capture_default_str();
  augment->add_option("--ratio", run_options.ratio,
                      "Augmented:original proportion, e.g. 1, 0.5, 1:2.24, or all")
      ->capture_default_str();
  augment->add_option("--seed", run_options.seed, "Sampling seed")->capture_default_str();
  augment->add_option("--max-per-problem", run_options.max_per_problem,
                      "Cap per original problem, or unlimited")
      ->capture_default_str();
  augment->add_option("--pronoun-table", run_options.pronoun_table_path,
                      "Tab-separated pronoun table");
  augment->add_option("--constants", run_options.constant_list, "Constant surfaces")
      ->delimiter(',');
  augment->add_option("--exclude-parents", run_options.exclude_parents_path,
                      "Drop augmentations of the parent ids listed in this file");
  augment->add_option("--quarantine", run_options.quarantine_path,
                      "Write quarantined records and reasons here");
  augment->add_flag("--mix", run_options.mix, "Shuffle originals together with the output");
  augment->add_flag("--json", json, "Machine-readable output");

  InvertRequest invert_req;
  auto* invert_cmd = app.add_subcommand("invert", "Reverse an equation around one number");
  invert_cmd->add_option("equation", invert_req.equation, "Equation, e.g. x=660/(32+34)")
      ->required();
  invert_cmd->add_option("--target", invert_req.target, "Value of the number to reverse")
      ->required();
  invert_cmd->add_option("--answer", invert_req.answer, "Value of the old unknown")->required();
  invert_cmd->add_option("--text", invert_req.text, "Problem text for the filter rules");
  invert_cmd->add_flag("--json", json, "Machine-readable output");

  std::string normalize_eq, normalize_text;
  auto* normalize_cmd = app.add_subcommand("normalize", "Normalize an equation");
  normalize_cmd->add_option("equation", normalize_eq, "Equation")->required();
  normalize_cmd->add_option("--text", normalize_text, "Problem text giving number order");
  normalize_cmd->add_flag("--json", json, "Machine-readable output");

  std::string pairs_path, originals_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check augmented records");
  verify_cmd->add_option("--pairs", pairs_path, "Augmented records or {augmented, original} pairs")
      ->required();
  verify_cmd->add_option("--originals", originals_path, "Original records");
  verify_cmd->add_option("--language", run_options.language, "zh, en or auto");
  verify_cmd->add_option("--pronoun-table", run_options.pronoun_table_path, "Pronoun table");
  verify_cmd->add_option("--constants", run_options.constant_list, "Constant surfaces")
      ->delimiter(',');
  verify_cmd->add_flag("--json", json, "Machine-readable output");

  std::string stats_file;
  auto* stats_cmd = app.add_subcommand("stats", "Print a statistics file as a table");
  stats_cmd->add_option("file", stats_file, "Statistics file")->required();
  stats_cmd->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    if (augment->parsed()) return cmd_augment(run_options, json, out);
    if (invert_cmd->parsed()) return cmd_invert(invert_req, json, out);
    if (normalize_cmd->parsed()) return cmd_normalize(normalize_eq, normalize_text, json, out);
    if (verify_cmd->parsed()) return cmd_verify(pairs_path, originals_path, run_options, json, out);
    if (stats_cmd->parsed()) return cmd_stats(stats_file, json, out);
  } catch (const UsageError& e) {
    report_error(err, "usage", e.what());
    return kExitUsage;
  } catch (const CodedError& e) {
    report_error(err, "rejected", e.what(), e.code());
    return kExitRuntime;
  } catch (const IoError& e) {
    report_error(err, "io", e.what());
    return kExitRuntime;
  } catch (const SyntaxError& e) {
    report_error(err, "syntax", e.what());
    return kExitRuntime;
  } catch (const InversionError& e) {
    report_error(err, "inversion", e.what());
    return kExitRuntime;
  } catch (const std::exception& e) {
    report_error(err, "runtime", e.what());
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace roda::cli

#endif  // RODA_TOOLS_CLI_HPP_
