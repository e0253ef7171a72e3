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

#ifndef RODA_PARSE_HPP_
#define RODA_PARSE_HPP_

#include <string>
#include <string_view>

#include "roda/error.hpp"
#include "roda/expr.hpp"
#include "roda/rational.hpp"

namespace roda {

struct ParseOptions {
  const ConstantTable* constants = &ConstantTable::defaults();
  // Allow several distinct identifiers on the right-hand side. Used for
  // symbolic inputs such as "x=c-a-c+(c*a)+(b/b)".
  bool allow_symbols = false;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, const ParseOptions& options)
      : text_(text), options_(options) {}

  Equation parse_equation() {
    skip_space();
    std::string unknown = identifier();
    if (unknown.empty()) fail("expected unknown name");
    skip_space();
    if (!eat("=")) fail("missing '='");
    Expr rhs = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    auto names = variable_names(rhs);
    if (!options_.allow_symbols && names.size() > 1) {
      throw MultipleUnknowns("right-hand side has " +
                             std::to_string(names.size()) + " unknowns");
    }
    return Equation{std::move(unknown), std::move(rhs)};
  }

  Expr parse_expression() {
    Expr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool eat(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::optional<Op> additive() {
    if (eat("+")) return Op::kAdd;
    if (eat("-")) return Op::kSub;
    return std::nullopt;
  }

  std::optional<Op> multiplicative() {
    skip_space();
    if (text_.substr(pos_, 2) == "**") return std::nullopt;
    if (eat("*") || eat("\xC3\x97")) return Op::kMul;  // ×
    if (eat("/") || eat("\xC3\xB7")) return Op::kDiv;  // ÷
    return std::nullopt;
  }

  Expr expression() {
    Expr left = term();
    while (auto op = additive()) {
      left = Expr::binary(*op, std::move(left), term());
    }
    return left;
  }

  Expr term() {
    Expr left = power();
    while (auto op = multiplicative()) {
      left = Expr::binary(*op, std::move(left), power());
    }
    return left;
  }

  Expr power() {
    Expr base = primary();
    if (eat("^") || eat("**")) {
      return Expr::binary(Op::kPow, std::move(base), power());
    }
    return base;
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("dangling operator");
    if (auto frac = detail::scan_bracketed_fraction(text_, pos_)) {
      std::string surface(text_.substr(pos_, frac->length));
      pos_ += frac->length;
      return make_numeric_leaf(std::move(surface), frac->value,
                               *options_.constants);
    }
    if (eat("(")) return bracketed(")");
    if (eat("[")) return bracketed("]");
    if (eat("\xEF\xBC\x88")) return bracketed("\xEF\xBC\x89");  // （ ）
    if (detail::is_digit(text_[pos_])) {
      auto n = scan_numeral(text_, pos_);
      std::string surface(text_.substr(pos_, n->length));
      pos_ += n->length;
      return make_numeric_leaf(std::move(surface), n->value,
                               *options_.constants);
    }
    std::string name = identifier();
    if (name.empty()) fail("unexpected character");
    if (const auto* c = options_.constants->find(name)) {
      return Expr::constant(c->kind, name, c->value);
    }
    return Expr::variable(std::move(name));
  }

  Expr bracketed(std::string_view close) {
    Expr inner = expression();
    if (!eat(close)) fail("unbalanced parenthesis");
    return inner;
  }

  std::string identifier() {
    skip_space();
    if (text_.substr(pos_, 2) == "\xCF\x80") {  // π
      pos_ += 2;
      return "\xCF\x80";
    }
    std::size_t start = pos_;
    auto ident_start = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) return {};
    while (pos_ < text_.size() &&
           (ident_start(text_[pos_]) || detail::is_digit(text_[pos_]) ||
            text_[pos_] == '\'')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "x = <expr>" with the usual precedence (^ over * / over + -),
/// left associativity for + - * /, right associativity for ^.
inline Equation parse_equation(std::string_view text,
                               const ParseOptions& options = {}) {
  return detail::ExprParser(text, options).parse_equation();
}

inline Expr parse_expression(std::string_view text,
                             const ParseOptions& options = {}) {
  return detail::ExprParser(text, options).parse_expression();
}

}  // namespace roda

#endif  // RODA_PARSE_HPP_
