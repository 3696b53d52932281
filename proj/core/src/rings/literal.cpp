// Copyright 2026 The skewlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skewlab/rings/literal.hpp"

#include <cctype>

#include "skewlab/error.hpp"

namespace skewlab::rings {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::BadLiteral, what + " at position " + std::to_string(pos_) + " in \"" +
                                      std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, std::size_t pos) {
    Expr e;
    e.kind = kind;
    e.pos = pos;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr expression() {
    Expr lhs = term();
    for (;;) {
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(Expr::Kind::Add, std::move(lhs), term(), at);
      } else if (accept('-')) {
        lhs = binary(Expr::Kind::Sub, std::move(lhs), term(), at);
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = binary(Expr::Kind::Mul, std::move(lhs), unary(), at);
      } else if (accept('/')) {
        lhs = binary(Expr::Kind::Div, std::move(lhs), unary(), at);
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    const std::size_t at = pos_;
    if (accept('-')) {
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.pos = at;
      e.args.push_back(unary());
      return e;
    }
    if (accept('+')) return unary();
    Expr base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      Expr e;
      e.kind = Expr::Kind::Pow;
      e.pos = at;
      e.exponent = static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      e.args.push_back(std::move(base));
      return e;
    }
    return base;
  }

  std::vector<Expr> comma_list(char close) {
    std::vector<Expr> items;
    if (accept(close)) return items;
    items.push_back(expression());
    while (accept(',')) items.push_back(expression());
    expect(close);
    return items;
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of literal");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      Expr e;
      e.pos = at;
      e.number = mpz_class(std::string(text_.substr(at, pos_ - at)));
      // `2i` is an imaginary literal
      if (pos_ < text_.size() && text_[pos_] == 'i' &&
          (pos_ + 1 == text_.size() || std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])) == 0)) {
        ++pos_;
        e.kind = Expr::Kind::Imag;
      } else {
        e.kind = Expr::Kind::Number;
      }
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
        ++pos_;
      }
      Expr e;
      e.pos = at;
      e.name = std::string(text_.substr(at, pos_ - at));
      if (accept('(')) {
        e.kind = Expr::Kind::Call;
        e.args = comma_list(')');
        return e;
      }
      if (e.name == "i") {
        e.kind = Expr::Kind::Imag;
        e.number = 1;
        e.name.clear();
        return e;
      }
      e.kind = Expr::Kind::Symbol;
      return e;
    }
    if (accept('(')) {
      std::vector<Expr> items = comma_list(')');
      if (items.empty()) fail("empty parentheses");
      if (items.size() == 1) return std::move(items.front());
      Expr e;
      e.kind = Expr::Kind::Tuple;
      e.pos = at;
      e.args = std::move(items);
      return e;
    }
    if (accept('[')) {
      Expr e;
      e.kind = Expr::Kind::Bracket;
      e.pos = at;
      e.args = comma_list(']');
      return e;
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_literal(std::string_view text) { return Parser(text).parse(); }

bool mentions(const Expr& e, std::string_view symbol) {
  if (e.kind == Expr::Kind::Symbol && e.name == symbol) return true;
  for (const Expr& a : e.args) {
    if (mentions(a, symbol)) return true;
  }
  return false;
}

}  // namespace skewlab::rings
