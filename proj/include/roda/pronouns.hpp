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

#ifndef RODA_PRONOUNS_HPP_
#define RODA_PRONOUNS_HPP_

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "roda/error.hpp"
#include "roda/text.hpp"

namespace roda {

struct PronounEntry {
  std::string pattern;
  bool last_unit_only = false;
  // "{answer}" marks where the answer goes when the pronoun is replaced.
  std::string answer_slot_template = "{answer}";
};

/// Interrogative pronouns of one language, in matching priority order.
struct PronounTable {
  Language language = Language::kZh;
  std::vector<PronounEntry> entries;

  static const PronounTable& chinese() {
    static const PronounTable table{
        Language::kZh,
        {
            {"\xE5\xA4\x9A\xE5\xB0\x91", false, "{answer}"},                          // 多少
            {"\xE5\x87\xA0\xE5\x88\x86\xE4\xB9\x8B\xE5\x87\xA0", false, "{answer}"},  // 几分之几
            {"\xE5\x87\xA0", false, "{answer}"},                                      // 几
            {"=", true, "={answer}"},
            {"\xE6\xB1\x82", false, "{after}\xE6\x98\xAF{answer}"},  // 求 -> {after}是{answer}
            {"((())/(()))", false, "{answer}"},
            {"\xE5\xA4\x9A", true, "\xE5\xA4\x9A{answer}"},  // 多 -> 多{answer}
        }};
    return table;
  }

  static const PronounTable& english() {
    static const PronounTable table{
        Language::kEn,
        {
            {"how many"}, {"how much"}, {"how far"}, {"how tall"},
            {"how long"}, {"how fast"}, {"how old"}, {"how big"},
            {"what fraction"}, {"what"},
        }};
    return table;
  }

  static const PronounTable& defaults(Language lang) {
    return lang == Language::kZh ? chinese() : english();
  }
};

/// Both languages' tables.
struct PronounTables {
  PronounTable zh = PronounTable::chinese();
  PronounTable en = PronounTable::english();

  const PronounTable& for_language(Language lang) const {
    return lang == Language::kZh ? zh : en;
  }

  /// Reads tab-separated lines "language<TAB>pattern<TAB>any|last[<TAB>template]".
  /// '#' starts a comment line. A language present in the file replaces the
  /// built-in table for that language.
  static PronounTables parse(std::string_view content) {
    PronounTables out;
    bool seen_zh = false, seen_en = false;
    std::istringstream in{std::string(content)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (trim(line).empty() || line.front() == '#') continue;
      std::vector<std::string> fields;
      std::size_t start = 0;
      for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1) {
        fields.push_back(line.substr(start, tab - start));
      }
      fields.push_back(line.substr(start));
      if (fields.size() < 3 || fields.size() > 4 ||
          (fields[2] != "any" && fields[2] != "last") ||
          (fields[0] != "zh" && fields[0] != "en") || fields[1].empty()) {
        throw Error("pronoun table line " + std::to_string(line_no) + " is malformed");
      }
      PronounEntry e{fields[1], fields[2] == "last",
                     fields.size() == 4 ? fields[3] : "{answer}"};
      PronounTable& t = fields[0] == "zh" ? out.zh : out.en;
      bool& seen = fields[0] == "zh" ? seen_zh : seen_en;
      if (!seen) {
        t.entries.clear();
        seen = true;
      }
      t.entries.push_back(std::move(e));
    }
    return out;
  }

  static PronounTables load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot read pronoun table " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
  }
};

/// A pronoun occurrence inside a unit's text.
struct PronounMatch {
  const PronounEntry* entry = nullptr;
  std::size_t pos = 0;  // byte offset within DiscourseUnit::text
  std::size_t len = 0;
};

namespace detail {

inline bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '\'';
}

// Last whole-word, case-insensitive occurrence of `pattern`.
inline std::optional<std::size_t> find_word(std::string_view text,
                                            std::string_view pattern) {
  std::string hay = to_lower_ascii(text);
  std::string needle = to_lower_ascii(pattern);
  std::optional<std::size_t> found;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) {
    bool left_ok = pos == 0 || !is_word_char(hay[pos - 1]);
    std::size_t end = pos + needle.size();
    bool right_ok = end >= hay.size() || !is_word_char(hay[end]);
    if (left_ok && right_ok) found = pos;
  }
  return found;
}

}  // namespace detail

/// First table entry (in priority order) present in the unit, honoring the
/// last-unit restriction.
inline std::optional<PronounMatch> match_pronoun(const DiscourseUnit& unit,
                                                 bool is_last_unit,
                                                 const PronounTable& table) {
  for (const auto& e : table.entries) {
    if (e.last_unit_only && !is_last_unit) continue;
    std::optional<std::size_t> pos;
    if (table.language == Language::kZh) {
      auto p = unit.text.rfind(e.pattern);
      if (p != std::string::npos) pos = p;
    } else {
      pos = detail::find_word(unit.text, e.pattern);
    }
    if (pos) return PronounMatch{&e, *pos, e.pattern.size()};
  }
  return std::nullopt;
}

struct QuestionLocation {
  std::size_t unit_index = 0;
  PronounMatch match;
};

/// The last unit carrying an interrogative pronoun is the question.
inline QuestionLocation locate_question(const std::vector<DiscourseUnit>& units,
                                        const PronounTable& table) {
  for (std::size_t i = units.size(); i-- > 0;) {
    if (auto m = match_pronoun(units[i], i + 1 == units.size(), table)) {
      return QuestionLocation{i, *m};
    }
  }
  throw TransformError(TransformError::Kind::kNoQuestionFound,
                       "no interrogative pronoun found");
}

/// Number of units carrying a pronoun.
inline std::size_t count_question_units(const std::vector<DiscourseUnit>& units,
                                        const PronounTable& table) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (match_pronoun(units[i], i + 1 == units.size(), table)) ++n;
  }
  return n;
}

}  // namespace roda

#endif  // RODA_PRONOUNS_HPP_
