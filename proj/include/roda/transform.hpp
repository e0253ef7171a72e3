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

#ifndef RODA_TRANSFORM_HPP_
#define RODA_TRANSFORM_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "roda/english.hpp"
#include "roda/error.hpp"
#include "roda/mentions.hpp"
#include "roda/pronouns.hpp"
#include "roda/text.hpp"

namespace roda {

namespace detail {

inline constexpr std::string_view kZhFullStop = "\xE3\x80\x82";       // 。
inline constexpr std::string_view kZhQuestionMark = "\xEF\xBC\x9F";   // ？
inline constexpr std::string_view kZhHowMany = "\xE5\xA4\x9A\xE5\xB0\x91";  // 多少
inline constexpr std::string_view kZhWhatFraction =
    "\xE5\x87\xA0\xE5\x88\x86\xE4\xB9\x8B\xE5\x87\xA0";  // 几分之几
inline constexpr std::string_view kZhPercentOf = "\xE7\x99\xBE\xE5\x88\x86\xE4\xB9\x8B";  // 百分之

inline void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

// True when `s` holds only blanks, brackets and underscores.
inline bool is_placeholder_tail(std::string_view s) {
  static constexpr std::string_view kFullWidth[] = {
      "\xEF\xBC\x88", "\xEF\xBC\x89", "\xEF\xBC\x9F", "\xE3\x80\x80"};  // （ ） ？ ideographic space
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '(' || c == ')' || c == '_' || c == '?' || c == '\t') {
      ++i;
      continue;
    }
    bool matched = false;
    for (auto fw : kFullWidth) {
      if (s.substr(i, fw.size()) == fw) {
        i += fw.size();
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

inline std::string strip_zh_question_prefix(std::string text) {
  static constexpr std::string_view kPrefixes[] = {
      "\xE8\xAF\xB7\xE9\x97\xAE",  // 请问
      "\xE9\x97\xAE",              // 问
  };
  std::size_t lead = 0;
  while (lead < text.size() && is_ascii_space(text[lead])) ++lead;
  for (auto p : kPrefixes) {
    if (std::string_view(text).substr(lead, p.size()) == p) {
      text.erase(lead, p.size());
      break;
    }
  }
  return text;
}

inline std::string expand_pronoun(std::string_view text, const PronounMatch& match,
                                  const std::string& answer) {
  std::string before(text.substr(0, match.pos));
  std::string after(text.substr(match.pos + match.len));
  if (is_placeholder_tail(after)) after.clear();
  std::string filled = match.entry->answer_slot_template;
  bool uses_after = filled.find("{after}") != std::string::npos;
  replace_all(filled, "{answer}", answer);
  replace_all(filled, "{after}", uses_after ? std::string(trim(after)) : std::string());
  return before + filled + (uses_after ? std::string() : after);
}

inline std::string zh_close(std::string text, std::string_view terminator) {
  if (text.find(' ') != std::string::npos) {
    while (!text.empty() && text.back() == ' ') text.pop_back();
    text += ' ';
  }
  return text + std::string(terminator);
}

inline std::string zh_question_word(std::string_view surface) {
  if (surface.rfind("((", 0) == 0) return std::string(kZhWhatFraction);
  if (!surface.empty() && (surface.back() == '%' || surface.find("\xEF\xBC\x85") != std::string_view::npos)) {
    return std::string(kZhPercentOf) + std::string(kZhHowMany);
  }
  return std::string(kZhHowMany);
}

}  // namespace detail

/// Rewrites the question unit into a statement carrying `answer`. Returns
/// the new unit including its terminator.
inline std::string question_to_declarative(const DiscourseUnit& question,
                                           const PronounMatch& match, Language lang,
                                           const std::string& answer) {
  if (lang == Language::kZh) {
    std::string text = detail::expand_pronoun(question.text, match, answer);
    return detail::zh_close(detail::strip_zh_question_prefix(std::move(text)),
                            detail::kZhFullStop);
  }
  std::string pronoun = question.text.substr(match.pos, match.len);
  return english::to_declarative(question.text, pronoun, answer) + ".";
}

/// Rewrites the unit holding `mention` into a question about it. Returns the
/// new unit including its terminator.
inline std::string declarative_to_question(const DiscourseUnit& unit,
                                           const NumberMention& mention, Language lang) {
  if (mention.begin < unit.begin || mention.end > unit.begin + unit.text.size()) {
    throw TransformError(TransformError::Kind::kMentionOutsideUnit,
                         "number mention crosses a unit boundary");
  }
  std::size_t b = mention.begin - unit.begin;
  std::size_t e = mention.end - unit.begin;
  if (lang == Language::kZh) {
    std::string text = unit.text;
    if ((b > 0 && text[b - 1] == '/') || (e < text.size() && text[e] == '/')) {
      throw TransformError(TransformError::Kind::kUnsupportedDeclarativeShape,
                           "number is part of a written fraction");
    }
    text.replace(b, e - b, detail::zh_question_word(mention.surface));
    return detail::zh_close(std::move(text), detail::kZhQuestionMark);
  }
  return english::to_question(unit.text, b, e) + "?";
}

struct TransformResult {
  std::string text;
  std::size_t question_unit = 0;
  std::size_t declarative_unit = 0;
  std::string pronoun;
  std::string declarative;  // the rewritten question
  std::string question;     // the rewritten statement
};

namespace detail {

inline bool is_soft_terminator(std::string_view t) {
  std::string_view s = trim(t);
  return s.empty() || s == "," || s == ";" || s == ":" || s == "\xEF\xBC\x8C" ||
         s == "\xEF\xBC\x9B" || s == "\xE3\x80\x81" || s == "\xEF\xBC\x9A";
}

inline bool is_sentence_end(std::string_view t) { return !is_soft_terminator(t); }

inline std::string assemble(const std::vector<DiscourseUnit>& units,
                            const std::vector<bool>& keep, Language lang,
                            const std::string& declarative, const std::string& question) {
  bool segmented = false;
  for (const auto& u : units) segmented = segmented || u.text.find(' ') != std::string::npos;
  std::string out;
  bool sentence_start = true;
  std::size_t last_kept = units.size();
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (keep[i]) last_kept = i;
  }
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (!keep[i]) continue;
    const DiscourseUnit& u = units[i];
    std::string term(trim(u.terminator));
    if (is_soft_terminator(term)) {
      if (i == last_kept) {
        term = lang == Language::kZh ? std::string(kZhFullStop) : ".";
      } else if (i + 1 < units.size() && !keep[i + 1] &&
                 is_sentence_end(units[i + 1].terminator)) {
        term = std::string(trim(units[i + 1].terminator));
      }
    }
    if (lang == Language::kZh && segmented) {
      if (!out.empty()) out += ' ';
      out += std::string(trim(u.text)) + ' ' + term;
    } else if (lang == Language::kZh) {
      out += u.text + term;
    } else {
      std::string piece(trim(u.text));
      if (sentence_start) piece = english::capitalize(piece);
      if (!out.empty()) out += ' ';
      out += piece + term;
    }
    sentence_start = is_sentence_end(term);
  }
  if (lang == Language::kZh) {
    std::string head(trim(out));
    if (!segmented) return head + declarative + question;
    std::string tail = declarative.empty()
                           ? std::string(trim(question))
                           : std::string(trim(declarative)) + ' ' + std::string(trim(question));
    return head.empty() ? tail : head + ' ' + tail;
  }
  if (!out.empty()) out += ' ';
  if (!declarative.empty()) out += english::capitalize(declarative) + ' ';
  return out + english::capitalize(question);
}

}  // namespace detail

/// Moves the number `mention` into the question and the answer into the
/// statements: the question unit becomes a statement with `answer`, the unit
/// holding `mention` becomes the new question, and both go to the end.
inline TransformResult transform_problem(std::string_view text, Language lang,
                                         const NumberMention& mention,
                                         const std::string& answer,
                                         const PronounTable& pronouns) {
  auto units = segment_discourse(text, lang);
  QuestionLocation q = locate_question(units, pronouns);
  std::size_t d = units.size();
  for (const auto& u : units) {
    if (mention.begin >= u.begin && mention.begin < u.begin + u.text.size()) d = u.index;
  }
  if (d == units.size()) {
    throw TransformError(TransformError::Kind::kMentionOutsideUnit,
                         "number mention is not inside any unit");
  }

  TransformResult result;
  result.question_unit = q.unit_index;
  result.declarative_unit = d;
  result.pronoun = q.match.entry->pattern;

  if (d == q.unit_index) {
    if (lang == Language::kEn) {
      throw TransformError(TransformError::Kind::kUnsupportedQuestionShape,
                           "number sits inside the question sentence");
    }
    const DiscourseUnit& u = units[d];
    std::size_t mb = mention.begin - u.begin;
    std::size_t me = mention.end - u.begin;
    if (me > q.match.pos && mb < q.match.pos + q.match.len) {
      throw TransformError(TransformError::Kind::kUnsupportedQuestionShape,
                           "number overlaps the interrogative");
    }
    std::string word = detail::zh_question_word(mention.surface);
    std::string combined;
    if (mb < q.match.pos) {
      std::string tail = detail::expand_pronoun(std::string_view(u.text).substr(me),
                                                PronounMatch{q.match.entry, q.match.pos - me,
                                                             q.match.len},
                                                answer);
      combined = u.text.substr(0, mb) + word + tail;
    } else {
      std::string head = detail::expand_pronoun(
          std::string_view(u.text).substr(0, mb),
          PronounMatch{q.match.entry, q.match.pos, q.match.len}, answer);
      combined = head + word + u.text.substr(me);
    }
    result.declarative.clear();
    result.question = detail::zh_close(detail::strip_zh_question_prefix(combined),
                                       detail::kZhQuestionMark);
    std::vector<bool> keep(units.size(), true);
    keep[d] = false;
    result.text = detail::assemble(units, keep, lang, "", result.question);
    return result;
  }

  result.declarative = question_to_declarative(units[q.unit_index], q.match, lang, answer);
  result.question = declarative_to_question(units[d], mention, lang);
  std::vector<bool> keep(units.size(), true);
  keep[d] = false;
  keep[q.unit_index] = false;
  result.text = detail::assemble(units, keep, lang, result.declarative, result.question);
  return result;
}

}  // namespace roda

#endif  // RODA_TRANSFORM_HPP_
