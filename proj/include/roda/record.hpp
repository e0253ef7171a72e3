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

#ifndef RODA_RECORD_HPP_
#define RODA_RECORD_HPP_

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "roda/error.hpp"
#include "roda/mentions.hpp"
#include "roda/rational.hpp"
#include "roda/text.hpp"

namespace roda {

using Json = nlohmann::ordered_json;

/// One input problem.
struct MwpRecord {
  std::string id;
  std::string text;  // segmented text when given, else the original text
  std::string original_text;
  std::optional<std::string> segmented_text;
  Language language = Language::kZh;
  std::string equation_text;
  std::string answer_surface;
  Json extra = Json::object();  // unrecognised input fields, passed through
};

struct Provenance {
  std::vector<std::string> rule_trace;
  std::string pronoun;
  std::size_t question_unit = 0;
  std::size_t declarative_unit = 0;
};

/// A problem produced by reversing one number of a parent problem.
struct AugmentedRecord {
  std::string id;
  std::string parent_id;
  std::string text;
  Language language = Language::kZh;
  std::string equation_text;
  std::string answer_surface;
  Rational answer_value;
  NumberMention target_mention;
  Provenance provenance;
  bool segmented = false;
};

namespace detail {

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number_unsigned()) return std::to_string(j.get<unsigned long long>());
  if (j.is_number_float()) {
    std::ostringstream os;
    os.precision(17);
    os << j.get<double>();
    return os.str();
  }
  if (j.is_array() && !j.empty()) return scalar_text(j.front());
  return {};
}

inline std::string strip_float_suffix(std::string s) {
  auto dot = s.find(".0");
  while (dot != std::string::npos) {
    std::size_t end = dot + 2;
    while (end < s.size() && s[end] == '0') ++end;
    bool digit_after = end < s.size() && s[end] >= '0' && s[end] <= '9';
    bool digit_before = dot > 0 && s[dot - 1] >= '0' && s[dot - 1] <= '9';
    if (!digit_after && digit_before) {
      s.erase(dot, end - dot);
    } else {
      dot = end;
    }
    dot = s.find(".0", dot);
  }
  return s;
}

inline Rational require_value(const std::string& surface) {
  auto v = parse_rational(surface);
  if (!v) throw Error("not a number: " + surface);
  return *v;
}

}  // namespace detail

/// Builds a record from one JSON object. Accepts the Math23K field names
/// (id, original_text, segmented_text, equation, ans) and the AllArith ones
/// (iIndex, sQuestion, lEquations, lSolutions).
inline MwpRecord record_from_json(const Json& j, std::optional<Language> language = {}) {
  if (!j.is_object()) throw Error("record is not an object");
  MwpRecord r;
  if (j.contains("sQuestion")) {
    r.id = detail::scalar_text(j.value("iIndex", Json("")));
    r.original_text = j.at("sQuestion").get<std::string>();
    std::string eq = detail::scalar_text(j.at("lEquations"));
    eq.erase(std::remove_if(eq.begin(), eq.end(), [](char c) { return c == ' '; }), eq.end());
    if (eq.size() > 1 && (eq[0] == 'X' || eq[0] == 'x') && eq[1] == '=') eq[0] = 'x';
    r.equation_text = detail::strip_float_suffix(eq);
    r.answer_surface = detail::scalar_text(j.at("lSolutions"));
  } else {
    r.id = detail::scalar_text(j.value("id", Json("")));
    r.original_text = j.at("original_text").get<std::string>();
    if (j.contains("segmented_text") && j.at("segmented_text").is_string()) {
      r.segmented_text = j.at("segmented_text").get<std::string>();
    }
    r.equation_text = detail::scalar_text(j.at("equation"));
    r.answer_surface = detail::scalar_text(j.at("ans"));
  }
  r.text = r.segmented_text ? *r.segmented_text : r.original_text;
  r.language = language ? *language : detect_language(r.text);
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const char* known[] = {"id",         "original_text", "segmented_text", "equation",
                                  "ans",        "sQuestion",     "lEquations",     "lSolutions",
                                  "iIndex"};
    bool is_known = false;
    for (const char* k : known) is_known = is_known || it.key() == k;
    if (!is_known) r.extra[it.key()] = it.value();
  }
  return r;
}

inline Json to_json(const MwpRecord& r) {
  Json j;
  j["id"] = r.id;
  j["original_text"] = r.original_text;
  if (r.segmented_text) j["segmented_text"] = *r.segmented_text;
  j["equation"] = r.equation_text;
  j["ans"] = r.answer_surface;
  j["language"] = std::string(language_name(r.language));
  for (auto it = r.extra.begin(); it != r.extra.end(); ++it) j[it.key()] = it.value();
  return j;
}

inline Json to_json(const AugmentedRecord& r) {
  Json j;
  j["id"] = r.id;
  j["parent_id"] = r.parent_id;
  j["original_text"] = r.text;
  if (r.segmented) j["segmented_text"] = r.text;
  j["equation"] = r.equation_text;
  j["ans"] = r.answer_surface;
  j["language"] = std::string(language_name(r.language));
  j["target_span"] = {{"begin", r.target_mention.begin},
                      {"end", r.target_mention.end},
                      {"surface", r.target_mention.surface},
                      {"value", format_number(r.target_mention.value)}};
  j["provenance"] = {{"rules", r.provenance.rule_trace},
                     {"pronoun", r.provenance.pronoun},
                     {"question_unit", r.provenance.question_unit},
                     {"declarative_unit", r.provenance.declarative_unit}};
  return j;
}

inline AugmentedRecord augmented_from_json(const Json& j) {
  AugmentedRecord r;
  r.id = detail::scalar_text(j.at("id"));
  r.parent_id = detail::scalar_text(j.at("parent_id"));
  r.segmented = j.contains("segmented_text");
  r.text = j.at(r.segmented ? "segmented_text" : "original_text").get<std::string>();
  r.language = j.value("language", std::string()) == "en"   ? Language::kEn
               : j.value("language", std::string()) == "zh" ? Language::kZh
                                                            : detect_language(r.text);
  r.equation_text = j.at("equation").get<std::string>();
  r.answer_surface = detail::scalar_text(j.at("ans"));
  r.answer_value = detail::require_value(r.answer_surface);
  const Json& span = j.at("target_span");
  r.target_mention.begin = span.at("begin").get<std::size_t>();
  r.target_mention.end = span.at("end").get<std::size_t>();
  r.target_mention.surface = span.at("surface").get<std::string>();
  r.target_mention.value = detail::require_value(span.at("value").get<std::string>());
  if (j.contains("provenance")) {
    const Json& p = j.at("provenance");
    r.provenance.rule_trace = p.value("rules", std::vector<std::string>{});
    r.provenance.pronoun = p.value("pronoun", std::string());
    r.provenance.question_unit = p.value("question_unit", std::size_t{0});
    r.provenance.declarative_unit = p.value("declarative_unit", std::size_t{0});
  }
  return r;
}

/// Reads either one JSON array of objects or a stream of concatenated
/// objects (the layout of the Math23K release).
inline std::vector<Json> read_json_values(std::istream& in) {
  std::vector<Json> out;
  std::stringstream ss;
  ss << in.rdbuf();
  std::string content = ss.str();
  std::size_t i = 0;
  while (i < content.size() && is_ascii_space(content[i])) ++i;
  if (i == content.size()) return out;
  if (content[i] == '[') {
    Json all = Json::parse(content);
    for (auto& v : all) out.push_back(std::move(v));
    return out;
  }
  std::istringstream objects(content);
  while (true) {
    objects >> std::ws;
    if (objects.peek() == std::char_traits<char>::eof()) break;
    Json v;
    objects >> v;
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<Json> read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  try {
    return read_json_values(f);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& value) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << value.dump(2, ' ', false, Json::error_handler_t::replace) << '\n';
  if (!f) throw IoError("failed writing " + path);
}

}  // namespace roda

#endif  // RODA_RECORD_HPP_
