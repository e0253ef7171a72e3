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

#ifndef RODA_MENTIONS_HPP_
#define RODA_MENTIONS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "roda/rational.hpp"
#include "roda/text.hpp"

namespace roda {

/// One number occurrence in problem text.
struct NumberMention {
  std::size_t mention_id = 0;
  std::size_t begin = 0;  // byte span [begin, end)
  std::size_t end = 0;
  std::string surface;
  Rational value;
  std::size_t sentence_index = 0;
};

namespace detail {

inline bool digit_at(std::string_view s, std::size_t i) {
  return i < s.size() && s[i] >= '0' && s[i] <= '9';
}

inline std::size_t unit_index_at(const std::vector<DiscourseUnit>& units,
                                 std::size_t offset) {
  for (const auto& u : units) {
    if (offset >= u.begin && offset < u.end()) return u.index;
  }
  return units.empty() ? 0 : units.back().index;
}

}  // namespace detail

/// All maximal number tokens, in text order.
inline std::vector<NumberMention> find_number_mentions(std::string_view text,
                                                       Language lang) {
  std::vector<NumberMention> mentions;
  auto units = segment_discourse(text, lang);
  NumeralOptions options{lang == Language::kEn};
  std::size_t i = 0;
  while (i < text.size()) {
    bool at_fraction = text[i] == '(' && detail::scan_bracketed_fraction(text, i);
    bool at_digit = detail::digit_at(text, i) &&
                    !(i > 0 && (detail::digit_at(text, i - 1) || text[i - 1] == '.'));
    if (!at_fraction && !at_digit) {
      i += utf8::sequence_length(static_cast<unsigned char>(text[i]));
      continue;
    }
    auto n = scan_numeral(text, i, options);
    NumberMention m;
    m.mention_id = mentions.size();
    m.begin = i;
    m.end = i + n->length;
    m.surface = std::string(text.substr(i, n->length));
    m.value = n->value;
    m.sentence_index = detail::unit_index_at(units, i);
    mentions.push_back(std::move(m));
    i += n->length;
  }
  return mentions;
}

/// Keywords stripped before judging whether a problem is a bare calculation.
inline const std::vector<std::string>& default_calculation_keywords() {
  static const std::vector<std::string> keywords = {
      "please calculate", "calculate", "compute", "evaluate", "solve",
      "\xE7\xAE\x80\xE4\xBE\xBF\xE8\xAE\xA1\xE7\xAE\x97",  // 简便计算
      "\xE8\x84\xB1\xE5\xBC\x8F\xE8\xAE\xA1\xE7\xAE\x97",  // 脱式计算
      "\xE8\xAE\xA1\xE7\xAE\x97",                          // 计算
      "\xE8\xA7\xA3\xE6\x96\xB9\xE7\xA8\x8B",              // 解方程
      "\xE6\xB1\x82",                                      // 求
  };
  return keywords;
}

struct PureArithmeticOptions {
  std::vector<std::string> keywords = default_calculation_keywords();
  std::size_t min_content_chars = 4;
};

/// True when nothing but numbers, operators and calculation keywords is
/// left: fewer than `min_content_chars` code points remain after removal.
inline bool is_pure_arithmetic(std::string_view text, Language lang,
                               const PureArithmeticOptions& options = {}) {
  std::string rest;
  std::size_t cursor = 0;
  for (const auto& m : find_number_mentions(text, lang)) {
    rest.append(text.substr(cursor, m.begin - cursor));
    rest += ' ';
    cursor = m.end;
  }
  rest.append(text.substr(cursor));
  std::string lowered = to_lower_ascii(rest);
  for (const auto& kw : options.keywords) {
    std::string k = to_lower_ascii(kw);
    for (auto pos = lowered.find(k); pos != std::string::npos; pos = lowered.find(k, pos)) {
      lowered.replace(pos, k.size(), " ");
    }
  }
  static const std::vector<std::string_view> kOperators = {
      "+", "-", "*", "/", "=", "(", ")", "[", "]", "^", "%", ".",
      "\xC3\x97",      // ×
      "\xC3\xB7",      // ÷
      "\xEF\xBC\x88",  // （
      "\xEF\xBC\x89",  // ）
      "\xEF\xBC\x9D",  // ＝
  };
  std::size_t content = 0;
  for (std::size_t i = 0; i < lowered.size();) {
    if (is_ascii_space(lowered[i])) {
      ++i;
      continue;
    }
    bool skipped = false;
    for (auto op : kOperators) {
      if (std::string_view(lowered).substr(i, op.size()) == op) {
        i += op.size();
        skipped = true;
        break;
      }
    }
    if (skipped) continue;
    i += utf8::sequence_length(static_cast<unsigned char>(lowered[i]));
    ++content;
  }
  return content < options.min_content_chars;
}

}  // namespace roda

#endif  // RODA_MENTIONS_HPP_
