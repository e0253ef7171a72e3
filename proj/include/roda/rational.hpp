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

#ifndef RODA_RATIONAL_HPP_
#define RODA_RATIONAL_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace roda {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}
inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// A number token recognized by the numeral grammar.
struct Numeral {
  std::size_t length = 0;  // bytes consumed
  Rational value;
};

struct NumeralOptions {
  // Accept "1,000"-style digit grouping (English text only).
  bool digit_grouping = false;
};

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline std::size_t count_digits(std::string_view s, std::size_t pos) {
  std::size_t n = 0;
  while (pos + n < s.size() && is_digit(s[pos + n])) ++n;
  return n;
}

inline Integer pow10(std::size_t k) {
  Integer p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= 10;
  return p;
}

inline Integer parse_digits(std::string_view digits) {
  Integer v = 0;
  for (char c : digits) {
    if (c == ',') continue;
    v = v * 10 + (c - '0');
  }
  return v;
}

// Plain decimal "123" or "12.5"; no sign, no suffix.
inline std::optional<Numeral> scan_decimal(std::string_view s, std::size_t pos,
                                           bool digit_grouping) {
  std::size_t n = count_digits(s, pos);
  if (n == 0) return std::nullopt;
  std::size_t end = pos + n;
  if (digit_grouping && n <= 3) {
    std::size_t probe = end;
    while (probe + 4 <= s.size() && s[probe] == ',' &&
           count_digits(s, probe + 1) == 3) {
      probe += 4;
    }
    end = probe;
  }
  Integer whole = parse_digits(s.substr(pos, end - pos));
  Rational value(whole);
  if (end + 1 < s.size() && s[end] == '.' && is_digit(s[end + 1])) {
    std::size_t frac = count_digits(s, end + 1);
    Integer f = parse_digits(s.substr(end + 1, frac));
    value += Rational(f, pow10(frac));
    end += 1 + frac;
  }
  return Numeral{end - pos, value};
}

inline std::size_t percent_suffix(std::string_view s, std::size_t pos) {
  if (pos < s.size() && s[pos] == '%') return 1;
  if (s.substr(pos, 3) == "\xEF\xBC\x85") return 3;  // full-width percent
  return 0;
}

// "((a)/(b))"
inline std::optional<Numeral> scan_bracketed_fraction(std::string_view s,
                                                      std::size_t pos) {
  if (s.substr(pos, 2) != "((") return std::nullopt;
  std::size_t i = pos + 2;
  auto num = scan_decimal(s, i, false);
  if (!num) return std::nullopt;
  i += num->length;
  if (s.substr(i, 3) != ")/(") return std::nullopt;
  i += 3;
  auto den = scan_decimal(s, i, false);
  if (!den || den->value == 0) return std::nullopt;
  i += den->length;
  if (s.substr(i, 2) != "))") return std::nullopt;
  i += 2;
  return Numeral{i - pos, num->value / den->value};
}

}  // namespace detail

/// Recognizes one numeral starting exactly at `pos`: an integer, a decimal,
/// either followed by an optional percent sign, or a bracketed fraction
/// "((a)/(b))". Returns nullopt if no numeral starts there.
inline std::optional<Numeral> scan_numeral(std::string_view s, std::size_t pos,
                                           NumeralOptions options = {}) {
  if (pos >= s.size()) return std::nullopt;
  if (auto frac = detail::scan_bracketed_fraction(s, pos)) return frac;
  auto dec = detail::scan_decimal(s, pos, options.digit_grouping);
  if (!dec) return dec;
  if (std::size_t pct = detail::percent_suffix(s, pos + dec->length)) {
    dec->length += pct;
    dec->value /= 100;
  }
  return dec;
}

/// Parses a whole string as one numeral, e.g. "2.0", "50%", "((1)/(3))".
inline std::optional<Rational> parse_numeral(std::string_view s,
                                             NumeralOptions options = {}) {
  auto n = scan_numeral(s, 0, options);
  if (!n || n->length != s.size()) return std::nullopt;
  return n->value;
}

/// Parses user-supplied values: any numeral, or "p/q" with integer parts.
inline std::optional<Rational> parse_rational(std::string_view s) {
  if (auto v = parse_numeral(s)) return v;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  auto p = parse_numeral(s.substr(0, slash));
  auto q = parse_numeral(s.substr(slash + 1));
  if (!p || !q || *q == 0) return std::nullopt;
  return *p / *q;
}

/// Number of decimal places if `r` has a terminating decimal expansion.
inline std::optional<std::size_t> decimal_places(const Rational& r) {
  Integer d = denominator(r);
  std::size_t twos = 0, fives = 0;
  while (d % 2 == 0) d /= 2, ++twos;
  while (d % 5 == 0) d /= 5, ++fives;
  if (d != 1) return std::nullopt;
  return std::max(twos, fives);
}

/// Dataset surface for a value: integer when integral, terminating decimal up
/// to `max_places` places, otherwise the bracketed fraction "((p)/(q))".
inline std::string format_number(const Rational& value,
                                 std::size_t max_places = 6) {
  if (value < 0) return "-" + format_number(-value, max_places);
  if (is_integer(value)) return numerator(value).str();
  auto places = decimal_places(value);
  if (places && *places <= max_places) {
    Integer scaled = numerator(value) * detail::pow10(*places) /
                     denominator(value);
    std::string digits = scaled.str();
    if (digits.size() <= *places) {
      digits.insert(0, *places - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - *places, ".");
    return digits;
  }
  return "((" + numerator(value).str() + ")/(" + denominator(value).str() +
         "))";
}

}  // namespace roda

#endif  // RODA_RATIONAL_HPP_
