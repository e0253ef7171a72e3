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

#ifndef RODA_ENGLISH_HPP_
#define RODA_ENGLISH_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "roda/error.hpp"
#include "roda/text.hpp"

namespace roda::english {

struct Token {
  std::string text;
  std::size_t begin = 0;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_ascii_space(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_ascii_space(s[i])) ++i;
    if (i > start) out.push_back(Token{std::string(s.substr(start, i - start)), start});
  }
  return out;
}

inline std::string join(const std::vector<Token>& tokens, std::size_t from = 0,
                        std::size_t to = std::string::npos) {
  std::string out;
  to = std::min(to, tokens.size());
  for (std::size_t i = from; i < to; ++i) {
    if (!out.empty()) out += ' ';
    out += tokens[i].text;
  }
  return out;
}

inline std::string lower(std::string_view s) { return to_lower_ascii(s); }

/// Lowercased token stripped of surrounding punctuation.
inline std::string bare(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && !std::isalnum(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && !std::isalnum(static_cast<unsigned char>(s[e - 1]))) --e;
  return lower(s.substr(b, e - b));
}

inline std::string capitalize(std::string s) {
  for (char& c : s) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    }
    if (!is_ascii_space(c)) break;
  }
  return s;
}

inline bool is_capitalized(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

inline bool has_digit(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

inline const std::set<std::string, std::less<>>& be_forms() {
  static const std::set<std::string, std::less<>> s = {"is", "are", "was", "were"};
  return s;
}

inline const std::set<std::string, std::less<>>& do_forms() {
  static const std::set<std::string, std::less<>> s = {"do", "does", "did"};
  return s;
}

inline const std::set<std::string, std::less<>>& auxiliaries() {
  static const std::set<std::string, std::less<>> s = {
      "is",    "are",   "was",    "were", "do",    "does", "did",  "will",
      "would", "can",   "could",  "should", "shall", "may",  "might", "must",
      "has",   "have",  "had"};
  return s;
}

inline const std::set<std::string, std::less<>>& subject_pronouns() {
  static const std::set<std::string, std::less<>> s = {"he", "she", "it", "they",
                                                       "we", "you", "i"};
  return s;
}

inline const std::set<std::string, std::less<>>& determiners() {
  static const std::set<std::string, std::less<>> s = {
      "the", "a",   "an",   "this", "that", "these", "those", "his",  "her",
      "their", "its", "my", "our",  "your", "each",  "every", "some", "both",
      "all", "one", "two",  "three", "four", "five", "six", "ten"};
  return s;
}

inline const std::set<std::string, std::less<>>& conjunctions() {
  static const std::set<std::string, std::less<>> s = {"and", "but", "so", "then", "also"};
  return s;
}

inline const std::set<std::string, std::less<>>& temporal_heads() {
  static const std::set<std::string, std::less<>> s = {"later", "earlier", "ago",
                                                       "before", "after"};
  return s;
}

inline const std::set<std::string, std::less<>>& unit_stops() {
  static const std::set<std::string, std::less<>> s = {
      "in",  "on",  "at",   "for", "from", "to",   "of",   "with", "by",  "into",
      "and", "or",  "but",  "than", "each", "every", "per", "if",  "then", "so",
      "is",  "are", "was",  "were", "more", "less", "fewer", "left", "old", "as",
      "the", "a",   "an",   "that", "which", "who"};
  return s;
}

inline const std::set<std::string, std::less<>>& speed_units() {
  static const std::set<std::string, std::less<>> s = {
      "km/h", "km/hour", "kilometers/hour", "mph", "m/s", "meters/second",
      "miles/hour", "km/min", "m/min", "meters/minute"};
  return s;
}

inline const std::set<std::string, std::less<>>& dimension_adjectives() {
  static const std::set<std::string, std::less<>> s = {"long", "tall", "wide", "high",
                                                       "deep", "old",  "far",  "heavy",
                                                       "big"};
  return s;
}

/// Base forms recognised as verbs when scanning for a clause's main verb.
inline const std::set<std::string, std::less<>>& base_verbs() {
  static const std::set<std::string, std::less<>> s = {
      "add",    "arrive", "ask",    "bake",   "be",     "buy",    "build",  "carry",
      "catch",  "change", "charge", "collect", "contain", "cook",  "cost",   "count",
      "cover",  "cut",    "deliver", "dig",   "divide", "do",     "draw",   "drink",
      "drive",  "earn",   "eat",    "fill",   "find",   "finish", "fly",    "fold",
      "get",    "give",   "go",     "grow",   "have",   "hold",   "keep",   "leave",
      "lose",   "make",   "meet",   "move",   "need",   "open",   "pack",   "paint",
      "pass",   "pay",    "pick",   "plant",  "play",   "produce", "put",   "read",
      "receive", "remain", "ride",  "run",    "save",   "see",    "sell",   "send",
      "share",  "sing",   "sit",    "sleep",  "spend",  "start",  "swim",   "take",
      "teach",  "tell",   "think",  "throw",  "travel", "type",   "use",    "visit",
      "walk",   "want",   "wash",   "weigh",  "win",    "work",   "write",  "bring",
      "borrow", "lend",   "print",  "process", "repair", "score", "serve",  "ship",
      "sew",    "plow",   "pump",   "drain",  "cross",  "climb",  "jog",    "cycle",
      "hike",   "fix",    "load",   "transport", "plan", "prepare", "produce", "complete",
      "mow",    "knit",   "bike",   "row",    "sail",   "turn",   "make",   "pour",
      "hit",    "kick",   "shoot",  "jump",   "reach",  "donate", "feed",   "raise",
      "harvest", "pick",  "order",  "invite", "bring",  "stack",  "separate", "put"};
  return s;
}

struct VerbForms {
  std::string third_singular;
  std::string past;
};

inline const std::map<std::string, VerbForms, std::less<>>& irregular_verbs() {
  static const std::map<std::string, VerbForms, std::less<>> m = {
      {"be", {"is", "was"}},          {"have", {"has", "had"}},
      {"do", {"does", "did"}},        {"go", {"goes", "went"}},
      {"buy", {"buys", "bought"}},    {"bring", {"brings", "brought"}},
      {"build", {"builds", "built"}}, {"catch", {"catches", "caught"}},
      {"cut", {"cuts", "cut"}},       {"dig", {"digs", "dug"}},
      {"draw", {"draws", "drew"}},    {"drink", {"drinks", "drank"}},
      {"drive", {"drives", "drove"}}, {"eat", {"eats", "ate"}},
      {"feed", {"feeds", "fed"}},     {"find", {"finds", "found"}},
      {"fly", {"flies", "flew"}},     {"get", {"gets", "got"}},
      {"give", {"gives", "gave"}},    {"grow", {"grows", "grew"}},
      {"hit", {"hits", "hit"}},       {"hold", {"holds", "held"}},
      {"keep", {"keeps", "kept"}},    {"leave", {"leaves", "left"}},
      {"lend", {"lends", "lent"}},    {"lose", {"loses", "lost"}},
      {"make", {"makes", "made"}},    {"meet", {"meets", "met"}},
      {"pay", {"pays", "paid"}},      {"put", {"puts", "put"}},
      {"read", {"reads", "read"}},    {"ride", {"rides", "rode"}},
      {"run", {"runs", "ran"}},       {"see", {"sees", "saw"}},
      {"sell", {"sells", "sold"}},    {"send", {"sends", "sent"}},
      {"sew", {"sews", "sewed"}},     {"shoot", {"shoots", "shot"}},
      {"sing", {"sings", "sang"}},    {"sit", {"sits", "sat"}},
      {"sleep", {"sleeps", "slept"}}, {"spend", {"spends", "spent"}},
      {"swim", {"swims", "swam"}},    {"take", {"takes", "took"}},
      {"teach", {"teaches", "taught"}}, {"tell", {"tells", "told"}},
      {"think", {"thinks", "thought"}}, {"throw", {"throws", "threw"}},
      {"win", {"wins", "won"}},       {"write", {"writes", "wrote"}},
      {"mow", {"mows", "mowed"}},     {"knit", {"knits", "knitted"}},
      {"jog", {"jogs", "jogged"}},    {"ship", {"ships", "shipped"}},
      {"plan", {"plans", "planned"}}, {"stop", {"stops", "stopped"}},
  };
  return m;
}

inline bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

inline std::string third_singular(const std::string& base) {
  if (auto it = irregular_verbs().find(base); it != irregular_verbs().end()) {
    return it->second.third_singular;
  }
  if (ends_with(base, "s") || ends_with(base, "sh") || ends_with(base, "ch") ||
      ends_with(base, "x") || ends_with(base, "z") || ends_with(base, "o")) {
    return base + "es";
  }
  if (base.size() >= 2 && base.back() == 'y' && !is_vowel(base[base.size() - 2])) {
    return base.substr(0, base.size() - 1) + "ies";
  }
  return base + "s";
}

inline std::string past_tense(const std::string& base) {
  if (auto it = irregular_verbs().find(base); it != irregular_verbs().end()) {
    return it->second.past;
  }
  if (ends_with(base, "e")) return base + "d";
  if (base.size() >= 2 && base.back() == 'y' && !is_vowel(base[base.size() - 2])) {
    return base.substr(0, base.size() - 1) + "ied";
  }
  return base + "ed";
}

enum class Tense { kBase, kThirdSingular, kPast };

struct Lemma {
  std::string base;
  Tense tense = Tense::kBase;
};

/// Base form and tense of an inflected verb, if it looks like one.
inline std::optional<Lemma> lemmatize(const std::string& word) {
  const auto& verbs = base_verbs();
  for (const auto& [base, forms] : irregular_verbs()) {
    if (word == forms.past && word != base) return Lemma{base, Tense::kPast};
    if (word == forms.third_singular) return Lemma{base, Tense::kThirdSingular};
  }
  if (verbs.count(word) != 0) return Lemma{word, Tense::kBase};
  std::vector<Lemma> guesses;
  if (ends_with(word, "ies")) {
    guesses.push_back({word.substr(0, word.size() - 3) + "y", Tense::kThirdSingular});
  }
  if (ends_with(word, "es")) {
    guesses.push_back({word.substr(0, word.size() - 2), Tense::kThirdSingular});
  }
  if (ends_with(word, "s") && !ends_with(word, "ss")) {
    guesses.push_back({word.substr(0, word.size() - 1), Tense::kThirdSingular});
  }
  if (ends_with(word, "ied")) {
    guesses.push_back({word.substr(0, word.size() - 3) + "y", Tense::kPast});
  }
  if (ends_with(word, "ed")) {
    guesses.push_back({word.substr(0, word.size() - 1), Tense::kPast});
    guesses.push_back({word.substr(0, word.size() - 2), Tense::kPast});
    if (word.size() >= 4 && word[word.size() - 3] == word[word.size() - 4]) {
      guesses.push_back({word.substr(0, word.size() - 3), Tense::kPast});
    }
  }
  for (const auto& g : guesses) {
    if (verbs.count(g.base) != 0) return g;
  }
  return std::nullopt;
}

inline std::string conjugate(const std::string& base, std::string_view do_aux) {
  if (do_aux == "does") return third_singular(base);
  if (do_aux == "did") return past_tense(base);
  return base;
}

inline std::string do_support(Tense t) {
  switch (t) {
    case Tense::kPast:
      return "did";
    case Tense::kThirdSingular:
      return "does";
    case Tense::kBase:
      break;
  }
  return "do";
}

/// Length of the grammatical subject at the start of `tokens`, 0 when none
/// can be recognised.
inline std::size_t subject_length(const std::vector<Token>& tokens, bool allow_whole) {
  if (tokens.empty()) return 0;
  std::string first = bare(tokens[0].text);
  if (subject_pronouns().count(first) != 0) return 1;
  if (determiners().count(first) != 0 || has_digit(tokens[0].text)) {
    std::size_t j = 1;
    while (j < tokens.size()) {
      std::string w = bare(tokens[j].text);
      if (base_verbs().count(w) != 0 || auxiliaries().count(w) != 0) break;
      ++j;
    }
    if (j < tokens.size() || allow_whole) return j;
    return 0;
  }
  if (is_capitalized(tokens[0].text)) {
    std::size_t j = 1;
    while (j < tokens.size()) {
      if (is_capitalized(tokens[j].text)) {
        ++j;
      } else if (j + 1 < tokens.size() && bare(tokens[j].text) == "and" &&
                 is_capitalized(tokens[j + 1].text)) {
        j += 2;
      } else {
        break;
      }
    }
    return j;
  }
  return 0;
}

inline std::string lower_first_if_common(const std::vector<Token>& tokens, std::size_t from,
                                         std::size_t to) {
  std::string s = join(tokens, from, to);
  if (from < tokens.size()) {
    std::string w = bare(tokens[from].text);
    if ((determiners().count(w) != 0 || subject_pronouns().count(w) != 0) && w != "i" &&
        !s.empty()) {
      s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
    }
  }
  return s;
}

inline std::vector<Token> words_of(std::string_view phrase) { return tokenize(phrase); }

inline std::optional<std::size_t> find_phrase(const std::vector<Token>& tokens,
                                              std::string_view phrase) {
  auto words = words_of(phrase);
  if (words.empty() || words.size() > tokens.size()) return std::nullopt;
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i + words.size() <= tokens.size(); ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < words.size() && ok; ++k) {
      ok = bare(tokens[i + k].text) == lower(words[k].text);
    }
    if (ok) found = i;
  }
  return found;
}

/// Rewrites a question clause into a statement whose focus is `answer`.
/// `pronoun` is the interrogative phrase found in `clause`.
inline std::string to_declarative(std::string_view clause, std::string_view pronoun,
                                  const std::string& answer) {
  auto tokens = tokenize(clause);
  auto at = find_phrase(tokens, pronoun);
  if (!at) {
    throw TransformError(TransformError::Kind::kNoPronoun,
                         "interrogative phrase not found in the question");
  }
  const std::size_t p = *at;
  const std::size_t k = words_of(pronoun).size();
  std::string pron = lower(pronoun);

  if (p > 0) {
    std::string out = join(tokens, 0, p);
    out += ' ' + answer;
    if (p + k < tokens.size()) out += ' ' + join(tokens, p + k);
    return capitalize(out);
  }

  std::vector<Token> rest(tokens.begin() + static_cast<std::ptrdiff_t>(k), tokens.end());
  if (rest.empty()) {
    throw TransformError(TransformError::Kind::kUnsupportedQuestionShape,
                         "question has nothing after the interrogative");
  }

  if (pron == "what" && be_forms().count(bare(rest[0].text)) != 0) {
    if (rest.size() < 2) {
      throw TransformError(TransformError::Kind::kUnsupportedQuestionShape,
                           "question has no subject");
    }
    std::string subject = join(rest, 1);
    return capitalize(subject + ' ' + bare(rest[0].text) + ' ' + answer);
  }

  std::size_t a = 0;
  while (a < rest.size() && auxiliaries().count(bare(rest[a].text)) == 0) ++a;

  std::string head = answer;
  std::vector<Token> np(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(a));
  if (np.size() == 1 && bare(np[0].text) == "money") {
    head = "$" + answer;
    np.clear();
  }
  std::string np_text = join(np);
  auto with_np = [&](std::string s) {
    if (!np_text.empty()) s += ' ' + np_text;
    return s;
  };

  if (a == rest.size()) {
    std::string out = with_np(head);
    return capitalize(out);
  }

  const std::string aux = bare(rest[a].text);
  std::vector<Token> after(rest.begin() + static_cast<std::ptrdiff_t>(a) + 1, rest.end());

  if (be_forms().count(aux) != 0 && !after.empty() && bare(after[0].text) == "there") {
    std::string out = "There " + aux + ' ' + with_np(head);
    if (after.size() > 1) out += ' ' + join(after, 1);
    return out;
  }

  bool do_aux = do_forms().count(aux) != 0;
  std::size_t s_len = subject_length(after, !do_aux);
  if (s_len == 0) {
    std::string out = with_np(head) + ' ' + aux;
    if (!after.empty()) out += ' ' + join(after);
    return capitalize(out);
  }
  std::string subject = join(after, 0, s_len);
  std::vector<Token> vrest(after.begin() + static_cast<std::ptrdiff_t>(s_len), after.end());

  if (do_aux) {
    if (vrest.empty()) {
      throw TransformError(TransformError::Kind::kUnsupportedQuestionShape,
                           "do-question without a main verb");
    }
    std::string verb = conjugate(bare(vrest[0].text), aux);
    std::string out = subject + ' ' + verb + ' ' + with_np(head);
    if (vrest.size() > 1) out += ' ' + join(vrest, 1);
    return capitalize(out);
  }

  if (!np.empty() && temporal_heads().count(bare(np.back().text)) != 0) {
    std::string out = with_np(head) + ' ' + subject + ' ' + aux;
    if (!vrest.empty()) out += ' ' + join(vrest);
    return capitalize(out);
  }
  if (vrest.empty()) {
    if (np.empty() && pron.rfind("how ", 0) == 0 && pron != "how many" && pron != "how much") {
      std::string adj = pron.substr(4);
      if (adj == "old") return capitalize(subject + ' ' + aux + ' ' + head + " years old");
    }
    return capitalize(subject + ' ' + aux + ' ' + with_np(head));
  }
  std::string out = subject + ' ' + aux + ' ' + vrest[0].text + ' ' + with_np(head);
  if (vrest.size() > 1) out += ' ' + join(vrest, 1);
  return capitalize(out);
}

/// Rewrites a statement into a question about the number at byte offsets
/// [begin, end) of `clause`.
inline std::string to_question(std::string_view clause, std::size_t begin,
                               std::size_t end) {
  auto tokens = tokenize(clause);
  std::size_t m = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].begin <= begin && begin < tokens[i].begin + tokens[i].text.size()) {
      m = i;
      break;
    }
  }
  if (m == tokens.size()) {
    throw TransformError(TransformError::Kind::kMentionOutsideUnit,
                         "number mention not inside the clause");
  }
  const Token& tok = tokens[m];
  std::size_t local_b = begin - tok.begin;
  std::size_t local_e = std::min(end - tok.begin, tok.text.size());
  std::string prefix = tok.text.substr(0, local_b);
  std::string suffix = tok.text.substr(local_e);
  auto is_alnum = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; };
  bool dollar = prefix == "$";
  if ((!prefix.empty() && !dollar) ||
      (!suffix.empty() && std::any_of(suffix.begin(), suffix.end(), is_alnum))) {
    throw TransformError(TransformError::Kind::kUnsupportedDeclarativeShape,
                         "number is glued to other characters");
  }
  bool percent = clause.substr(begin, end - begin).find('%') != std::string_view::npos;

  // Unit words directly after the number.
  std::size_t u_end = m + 1;
  bool trailing_punct = !suffix.empty();
  while (!trailing_punct && u_end < tokens.size() && u_end < m + 4) {
    std::string w = bare(tokens[u_end].text);
    if (w.empty() || has_digit(tokens[u_end].text) || unit_stops().count(w) != 0 ||
        base_verbs().count(w) != 0 || auxiliaries().count(w) != 0) {
      break;
    }
    const std::string& raw = tokens[u_end].text;
    ++u_end;
    if (!raw.empty() && !is_alnum(raw.back()) && raw.back() != '/' &&
        speed_units().count(lower(raw)) == 0) {
      trailing_punct = true;
    }
  }
  std::vector<Token> unit(tokens.begin() + static_cast<std::ptrdiff_t>(m) + 1,
                          tokens.begin() + static_cast<std::ptrdiff_t>(u_end));
  std::string unit_text = join(unit);
  std::string unit_lower = lower(unit_text);
  while (!unit_lower.empty() && !is_alnum(unit_lower.back()) && unit_lower.back() != '/') {
    unit_lower.pop_back();
    unit_text.pop_back();
  }

  bool years_old = unit_lower == "years" && u_end < tokens.size() &&
                   bare(tokens[u_end].text) == "old";
  std::string cue;
  std::size_t consumed = u_end;
  if (percent) {
    cue = "what percent";
  } else if (dollar) {
    cue = "how much money";
  } else if (years_old) {
    cue = "how old";
    consumed = u_end + 1;
  } else if (unit_text.empty() && m + 2 < tokens.size() &&
             (bare(tokens[m + 1].text) == "more" || bare(tokens[m + 1].text) == "fewer") &&
             !has_digit(tokens[m + 2].text) && base_verbs().count(bare(tokens[m + 2].text)) == 0) {
    std::string noun = tokens[m + 2].text;
    while (!noun.empty() && !is_alnum(noun.back())) noun.pop_back();
    cue = "how many " + bare(tokens[m + 1].text) + ' ' + noun;
    consumed = m + 3;
  } else if (speed_units().count(unit_lower) != 0) {
    cue = "how fast";
  } else if (!unit_text.empty()) {
    cue = "how many " + unit_text;
  } else {
    cue = "how much";
  }

  std::size_t s_begin = 0;
  while (s_begin < m && conjunctions().count(bare(tokens[s_begin].text)) != 0) ++s_begin;
  std::string tail = consumed < tokens.size() ? join(tokens, consumed) : std::string();
  while (!tail.empty() && (tail.back() == ',' || tail.back() == '.')) tail.pop_back();

  // "S be N unit": ask what S is.
  if (m >= 1 && be_forms().count(bare(tokens[m - 1].text)) != 0 && m - 1 > s_begin &&
      bare(tokens[m - 2].text) != "there") {
    std::string be = bare(tokens[m - 1].text);
    std::string subject = lower_first_if_common(tokens, s_begin, m - 1);
    std::string adj = tail.empty() ? std::string() : bare(tail);
    if (years_old) return "How old " + be + ' ' + subject;
    if (dimension_adjectives().count(adj) != 0) return "How " + adj + ' ' + be + ' ' + subject;
    if (tail.empty()) {
      if (percent || dollar) return capitalize(cue) + ' ' + be + ' ' + subject;
      return "What " + be + ' ' + subject;
    }
  }

  // "There be N unit rest".
  if (m >= 2 && be_forms().count(bare(tokens[m - 1].text)) != 0 &&
      bare(tokens[m - 2].text) == "there" && !unit_text.empty() && !percent && !dollar) {
    std::string out = capitalize(cue) + ' ' + bare(tokens[m - 1].text) + " there";
    if (!tail.empty()) out += ' ' + tail;
    return out;
  }

  bool another_number = false;
  for (std::size_t i = consumed; i < tokens.size(); ++i) {
    another_number = another_number || has_digit(tokens[i].text);
  }

  // "S V N unit rest".
  if (m >= 1 && m - 1 > s_begin && !percent && !another_number) {
    std::string verb_word = bare(tokens[m - 1].text);
    if (auto lemma = lemmatize(verb_word);
        lemma && be_forms().count(verb_word) == 0 &&
        (auxiliaries().count(verb_word) == 0 || lemma->base == "have")) {
      std::string subject = lower_first_if_common(tokens, s_begin, m - 1);
      Tense tense = lemma->tense;
      std::string subject_word = bare(subject);
      if (tense == Tense::kBase && m - 1 == s_begin + 1 &&
          (subject_word == "he" || subject_word == "she" || subject_word == "it" ||
           (is_capitalized(tokens[s_begin].text) && subject_word != "i" &&
            subject_word.back() != 's'))) {
        tense = Tense::kPast;
      }
      std::string aux = do_support(tense);
      std::string out = capitalize(cue) + ' ' + aux + ' ' + subject + ' ' + lemma->base;
      if (!tail.empty()) out += ' ' + tail;
      return out;
    }
  }

  // Fall back to asking in place.
  std::string out;
  if (m > 0) out = join(tokens, 0, m) + ' ';
  out += cue;
  if (consumed < tokens.size()) {
    std::string rest = join(tokens, consumed);
    while (!rest.empty() && (rest.back() == ',' || rest.back() == '.')) rest.pop_back();
    if (!rest.empty()) out += ' ' + rest;
  }
  return capitalize(out);
}

}  // namespace roda::english

#endif  // RODA_ENGLISH_HPP_
