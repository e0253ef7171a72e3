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

#ifndef RODA_TEXT_HPP_
#define RODA_TEXT_HPP_

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace roda {

enum class Language { kZh, kEn };

inline std::string_view language_name(Language lang) {
  return lang == Language::kZh ? "zh" : "en";
}

namespace utf8 {

/// Byte length of the code point starting with `lead`.
inline std::size_t sequence_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

inline char32_t decode(std::string_view s, std::size_t pos, std::size_t* len) {
  auto lead = static_cast<unsigned char>(s[pos]);
  std::size_t n = sequence_length(lead);
  if (pos + n > s.size()) n = 1;
  *len = n;
  if (n == 1) return lead;
  char32_t cp = lead & (0x7F >> n);
  for (std::size_t i = 1; i < n; ++i) {
    cp = (cp << 6) | (static_cast<unsigned char>(s[pos + i]) & 0x3F);
  }
  return cp;
}

inline std::size_t code_points(std::string_view s) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); i += sequence_length(static_cast<unsigned char>(s[i]))) {
    ++count;
  }
  return count;
}

}  // namespace utf8

inline bool contains_cjk(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    std::size_t len = 1;
    char32_t cp = utf8::decode(s, i, &len);
    if (cp >= 0x4E00 && cp <= 0x9FFF) return true;
    i += len;
  }
  return false;
}

/// Script-based language guess used by the "auto" language mode.
inline Language detect_language(std::string_view text) {
  return contains_cjk(text) ? Language::kZh : Language::kEn;
}

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_ascii_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ascii_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

/// A punctuation-delimited span of problem text.
struct DiscourseUnit {
  std::size_t index = 0;
  std::size_t begin = 0;  // byte offset of `text` in the source
  std::string text;       // content without the terminator
  std::string terminator; // may be empty for an unterminated tail
  bool is_question = false;

  std::string full() const { return text + terminator; }
  std::size_t end() const { return begin + text.size() + terminator.size(); }
};

namespace detail {

inline constexpr std::array<std::string_view, 6> kZhFullWidthTerminators = {
    "\xEF\xBC\x8C",  // ，
    "\xE3\x80\x82",  // 。
    "\xEF\xBC\x9F",  // ？
    "\xEF\xBC\x81",  // ！
    "\xEF\xBC\x9B",  // ；
    "\xEF\xBC\x8E",  // ．
};

inline bool is_abbreviation_before(std::string_view text, std::size_t dot) {
  static constexpr std::array<std::string_view, 9> kAbbrev = {
      "Mr", "Mrs", "Ms", "Dr", "St", "Jr", "Sr", "vs", "etc"};
  for (auto a : kAbbrev) {
    if (dot >= a.size() && text.substr(dot - a.size(), a.size()) == a &&
        (dot == a.size() || !std::isalpha(static_cast<unsigned char>(
                                text[dot - a.size() - 1])))) {
      return true;
    }
  }
  return false;
}

// Length of the terminator starting at `pos`, or 0.
inline std::size_t terminator_at(std::string_view text, std::size_t pos,
                                 Language lang) {
  char c = text[pos];
  auto digit = [&](std::size_t i) {
    return i < text.size() && text[i] >= '0' && text[i] <= '9';
  };
  if (c == '?' || c == '!') return 1;
  if (c == ',') {
    if (lang == Language::kEn && pos > 0 && digit(pos - 1) && digit(pos + 1) &&
        digit(pos + 2) && digit(pos + 3) && !digit(pos + 4)) {
      return 0;  // digit grouping
    }
    return 1;
  }
  if (lang == Language::kZh) {
    for (auto t : kZhFullWidthTerminators) {
      if (text.substr(pos, t.size()) == t) return t.size();
    }
    return 0;
  }
  if (c == '.') {
    if (pos > 0 && digit(pos - 1) && digit(pos + 1)) return 0;
    if (is_abbreviation_before(text, pos)) return 0;
    return 1;
  }
  return 0;
}

inline bool is_question_terminator(std::string_view t) {
  return t.find('?') != std::string_view::npos ||
         t.find("\xEF\xBC\x9F") != std::string_view::npos;
}

}  // namespace detail

/// Splits text into discourse units. Chinese splits on ，。？！；,?! and
/// English on . ? ! and commas. Runs of terminators stay with one unit, and
/// concatenating text + terminator over all units restores the input.
inline std::vector<DiscourseUnit> segment_discourse(std::string_view text,
                                                    Language lang) {
  std::vector<DiscourseUnit> units;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t t = detail::terminator_at(text, i, lang);
    if (t == 0) {
      i += utf8::sequence_length(static_cast<unsigned char>(text[i]));
      continue;
    }
    std::size_t term_start = i;
    i += t;
    while (i < text.size()) {
      std::size_t more = detail::terminator_at(text, i, lang);
      if (more == 0) break;
      i += more;
    }
    DiscourseUnit u;
    u.index = units.size();
    u.begin = start;
    u.text = std::string(text.substr(start, term_start - start));
    u.terminator = std::string(text.substr(term_start, i - term_start));
    u.is_question = detail::is_question_terminator(u.terminator);
    units.push_back(std::move(u));
    start = i;
  }
  if (start < text.size()) {
    std::string_view tail = text.substr(start);
    if (!units.empty() && trim(tail).empty()) {
      units.back().terminator += std::string(tail);
      return units;
    }
    DiscourseUnit u;
    u.index = units.size();
    u.begin = start;
    u.text = std::string(text.substr(start));
    units.push_back(std::move(u));
  }
  return units;
}

inline std::string join_units(const std::vector<DiscourseUnit>& units) {
  std::string out;
  for (const auto& u : units) out += u.full();
  return out;
}

}  // namespace roda

#endif  // RODA_TEXT_HPP_
