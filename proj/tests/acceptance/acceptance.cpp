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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "roda/roda.hpp"
#include "roda/testkit.hpp"

using namespace roda;

namespace {

const std::string kData = RODA_TEST_DATA_DIR;

struct Verdict {
  enum class State { kPass, kFail, kNotRun } state;
  std::string detail;
};

Verdict pass(std::string d) { return {Verdict::State::kPass, std::move(d)}; }
Verdict fail(std::string d) { return {Verdict::State::kFail, std::move(d)}; }
Verdict check(bool ok, std::string d) { return ok ? pass(std::move(d)) : fail(std::move(d)); }

struct CliOutcome {
  int code;
  std::string out;
  std::string err;
};

CliOutcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "roda");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("roda_acceptance_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::string kCars =
    "The distance between city A and B is 660 km, the car starting from A drives 32 km/h, and "
    "the car starting from B drives 34 km/h. The two cars are starting from the two places at "
    "the same time heading toward each other. How many hours later would the two cars meet?";

Verdict inversion_oracle() {
  testkit::ExprGenerator g(1);
  g.max_depth = 6;
  auto r = testkit::run_oracle(g, 10000);
  std::ostringstream d;
  d << r.trials << " equations, " << r.leaves_checked << " leaves, " << r.mismatches.size()
    << " failures, min branch " << r.min_branch() << ", " << r.seconds << " s";
  if (!r.mismatches.empty()) {
    d << "; first: " << r.mismatches.front().equation << " leaf " << r.mismatches.front().leaf_id
      << " got " << r.mismatches.front().got;
  }
  return check(r.trials >= 10000 && r.mismatches.empty() && r.min_branch() >= 100 &&
                   r.seconds < 60.0,
               d.str());
}

Verdict cli_invert() {
  CliOutcome plain = cli({"invert", "x=660/(32+34)", "--target", "660", "--answer", "10"});
  CliOutcome json =
      cli({"--json", "invert", "x=660/(32+34)", "--target", "660", "--answer", "10"});
  if (plain.code != 0 || json.code != 0) return fail("exit codes " + plain.err + json.err);
  Json j = Json::parse(json.out);
  Rational value = evaluate(parse_equation(j["equation"].get<std::string>()).rhs);
  return check(plain.out == "x=10*(32+34)\n" && j["verified"] == true && value == 660,
               "printed " + plain.out.substr(0, plain.out.size() - 1) + ", evaluates to " +
                   format_number(value));
}

Verdict normalization() {
  ParseOptions po;
  po.allow_symbols = true;
  std::string table = serialize(normalize(parse_equation("x=c-a-c+(c*a)+(b/b)", po)));
  testkit::SymbolicGenerator g(8);
  std::size_t expressions = 0, bindings = 0, value_errors = 0, unstable = 0, undefined = 0;
  while (expressions < 1000) {
    Equation eq = g.equation();
    std::vector<std::pair<Bindings, Rational>> points;
    for (int k = 0; points.size() < 100 && k < 1000; ++k) {
      Bindings b = g.bindings();
      try {
        points.emplace_back(b, evaluate(eq.rhs, b));
      } catch (const DivisionByZero&) {
      }
    }
    if (points.size() < 100) {
      ++undefined;
      continue;
    }
    ++expressions;
    Equation n = normalize(eq);
    if (serialize(normalize(n)) != serialize(n)) ++unstable;
    for (const auto& [b, expected] : points) {
      ++bindings;
      try {
        if (evaluate(n.rhs, b) != expected) ++value_errors;
      } catch (const Error&) {
        ++value_errors;
      }
    }
  }
  std::ostringstream d;
  d << table << "; " << expressions << " expressions, " << bindings << " bindings, "
    << value_errors << " value changes, " << unstable << " not idempotent, " << undefined
    << " mostly undefined expressions skipped";
  return check(table == "x=1-a+(a*c)" && value_errors == 0 && unstable == 0 &&
                   bindings >= 100 * expressions,
               d.str());
}

Verdict filter_rules() {
  auto codes = [](std::string_view text, std::string_view equation) {
    std::vector<std::string> out;
    for (const auto& c :
         align_and_filter(text, detect_language(text), parse_equation(equation))) {
      if (c.reason && *c.reason != RejectReason::kInsignificant) {
        out.emplace_back(reason_code(*c.reason));
      }
    }
    return out;
  };
  auto r1 = codes("He has 3 red and 3 blue balls.", "x=3+3");
  auto r2 = codes("Each side is 2 cm.", "x=2*2");
  auto r3 = codes("A cube has side 4, raised to power 3.", "x=4^3");
  auto r4 = codes("A circle has radius 5.", "x=pi*5");
  auto all = [](const std::vector<std::string>& v, const std::string& c, std::size_t n) {
    return v.size() == n && std::count(v.begin(), v.end(), c) == static_cast<long>(n);
  };
  return check(all(r1, "R1_TEXT_DUP", 2) && all(r2, "R2_EQ_DUP", 1) && all(r3, "R3_POWER", 2) &&
                   all(r4, "R4_CONSTANT", 1),
               "R1 x" + std::to_string(r1.size()) + ", R2 x" + std::to_string(r2.size()) +
                   ", R3 x" + std::to_string(r3.size()) + ", R4 x" + std::to_string(r4.size()));
}

Verdict transformation() {
  auto mentions = find_number_mentions(kCars, Language::kEn);
  TransformResult r = transform_problem(kCars, Language::kEn, mentions.at(0), "10",
                                        PronounTable::english());
  bool sentence = r.text.find("10 hours later the two cars would meet.") != std::string::npos;
  auto units = segment_discourse(r.text, Language::kEn);
  bool final_question = !units.empty() && units.back().is_question &&
                        count_question_units(units, PronounTable::english()) == 1;
  std::multiset<Rational> before, after;
  for (const auto& m : mentions) before.insert(m.value);
  before.erase(before.find(660));
  before.insert(10);
  for (const auto& m : find_number_mentions(r.text, Language::kEn)) after.insert(m.value);
  return check(sentence && final_question && before == after, r.text);
}

Verdict dataset_statistics() {
  const char* math23k = std::getenv("RODA_MATH23K");
  const char* allarith = std::getenv("RODA_ALLARITH");
  if (math23k == nullptr || allarith == nullptr) {
    return {Verdict::State::kNotRun, "set RODA_MATH23K and RODA_ALLARITH to the dataset files"};
  }
  PipelineOptions zh;
  zh.language = Language::kZh;
  DatasetResult m = augment_dataset(math23k, zh);
  PipelineOptions en;
  en.language = Language::kEn;
  DatasetResult a = augment_dataset(allarith, en);
  double m_ratio = proportion(m.stats.augmented_problems(), m.stats.original_problems);
  double a_ratio = proportion(a.stats.augmented_problems(), a.stats.original_problems);
  double filtered = static_cast<double>(m.stats.filtered_problems);
  std::ostringstream d;
  d << "Math23K " << m_ratio << " (filtered " << m.stats.filtered_problems << "), AllArith "
    << a_ratio;
  return check(m_ratio >= 2.0 && m_ratio <= 2.4 && filtered >= 1490 * 0.85 &&
                   filtered <= 1490 * 1.15 && a_ratio >= 0.75 && a_ratio <= 0.95,
               d.str());
}

Verdict output_integrity() {
  std::size_t total = 0, verified = 0, duplicates = 0;
  bool identical = true;
  for (const char* file : {"/corpus_zh.json", "/corpus_en.json", "/fig1.json"}) {
    std::string input = kData + file;
    std::string out1 = temp_path("run1.json"), out2 = temp_path("run2.json");
    if (cli({"augment", "--input", input, "--output", out1, "--mix", "--seed", "11"}).code != 0 ||
        cli({"augment", "--input", input, "--output", out2, "--mix", "--seed", "11"}).code != 0) {
      return fail(std::string("augment failed on ") + file);
    }
    identical = identical && slurp(out1) == slurp(out2) &&
                slurp(out1 + ".stats.json") == slurp(out2 + ".stats.json");
    std::map<std::string, MwpRecord> parents;
    for (const auto& j : read_json_file(input)) {
      MwpRecord r = record_from_json(j);
      parents.emplace(r.id, r);
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& j : read_json_file(out1)) {
      std::string text = j.contains("segmented_text") ? j["segmented_text"].get<std::string>()
                                                      : j["original_text"].get<std::string>();
      if (!seen.emplace(detail::collapse_spaces(text), j["equation"].get<std::string>()).second) {
        ++duplicates;
      }
      if (!j.contains("parent_id")) continue;
      ++total;
      AugmentedRecord a = augmented_from_json(j);
      if (verify(a, parents.at(a.parent_id))) ++verified;
    }
    for (const auto& p : {out1, out2}) {
      std::remove(p.c_str());
      std::remove((p + ".stats.json").c_str());
    }
  }
  std::ostringstream d;
  d << verified << "/" << total << " verified, " << duplicates << " duplicates, reruns "
    << (identical ? "identical" : "differ");
  return check(total > 0 && verified == total && duplicates == 0 && identical, d.str());
}

Verdict ratio_one() {
  std::ostringstream d;
  bool ok = true;
  for (const char* file : {"/corpus_zh.json", "/corpus_en.json", "/fig1.json"}) {
    std::string out = temp_path("ratio.json");
    CliOutcome all = cli({"--json", "augment", "--input", kData + file, "--output", out});
    CliOutcome one =
        cli({"--json", "augment", "--input", kData + file, "--output", out, "--ratio", "1"});
    if (all.code != 0 || one.code != 0) return fail(std::string("augment failed on ") + file);
    std::size_t available = Json::parse(all.out)["stats"]["emitted"].get<std::size_t>();
    std::size_t originals = Json::parse(one.out)["stats"]["Original Problems"].get<std::size_t>();
    std::size_t got = read_json_file(out).size();
    std::size_t want = std::min(originals, available);
    ok = ok && got == want;
    d << file + 1 << " " << got << "/" << originals << " (available " << available << ") ";
    std::remove(out.c_str());
    std::remove((out + ".stats.json").c_str());
  }
  return check(ok, d.str());
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"inversion oracle", inversion_oracle},
      {"invert command", cli_invert},
      {"normalization", normalization},
      {"filter rules", filter_rules},
      {"text transformation", transformation},
      {"dataset statistics", dataset_statistics},
      {"output integrity", output_integrity},
      {"ratio 1", ratio_one},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const char* label = v.state == Verdict::State::kPass   ? "PASS"
                        : v.state == Verdict::State::kFail ? "FAIL"
                                                           : "NOT RUN";
    if (v.state == Verdict::State::kFail) ++failures;
    std::cout << "criterion " << (i + 1) << " " << label << " " << criteria[i].first << ": "
              << v.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
