// Recursive descent over the grammar
//   equation := expr "=" expr
//   expr     := term (("+" | "-") term)*
//   term     := unary (("*" | "/") unary)*
//   unary    := "-" unary | power
//   power    := atom ("^" unary)?
//   atom     := NUMBER | "x" | "tau" | "e" | "pi" | "i"
//             | FUNC "(" expr ")" | "(" expr ")"
// with ^ right-associative, no implicit multiplication, decimal literals
// converted exactly.
#include <cctype>
#include <string>
#include <vector>

#include "transcend/expr.hpp"

namespace transcend {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, "", src_.size()});
        return out;
      }
      char c = src_[i_];
      std::size_t start = i_;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(number(start));
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        if (!std::islower(static_cast<unsigned char>(c))) {
          throw SyntaxError("unexpected character '" + std::string(1, c) + "'",
                            start);
        }
        while (i_ < src_.size() &&
               std::islower(static_cast<unsigned char>(src_[i_]))) {
          ++i_;
        }
        out.push_back({Tok::Ident, std::string(src_.substr(start, i_ - start)),
                       start});
      } else {
        Tok t;
        switch (c) {
          case '+': t = Tok::Plus; break;
          case '-': t = Tok::Minus; break;
          case '*': t = Tok::Star; break;
          case '/': t = Tok::Slash; break;
          case '^': t = Tok::Caret; break;
          case '(': t = Tok::LParen; break;
          case ')': t = Tok::RParen; break;
          case '=': t = Tok::Equals; break;
          default:
            throw SyntaxError("unexpected character '" + std::string(1, c) + "'",
                              start);
        }
        ++i_;
        out.push_back({t, std::string(1, c), start});
      }
    }
  }

 private:
  void skip_ws() {
    while (i_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[i_]))) {
      ++i_;
    }
  }

  Token number(std::size_t start) {
    while (i_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[i_]))) {
      ++i_;
    }
    if (i_ < src_.size() && src_[i_] == '.') {
      ++i_;
      if (i_ >= src_.size() ||
          !std::isdigit(static_cast<unsigned char>(src_[i_]))) {
        throw SyntaxError("expected digits after decimal point", i_);
      }
      while (i_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[i_]))) {
        ++i_;
      }
    }
    return {Tok::Number, std::string(src_.substr(start, i_ - start)), start};
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(Lexer(src).run()) {}

  Parsed run() {
    Expr lhs = parse_expr_rule();
    if (peek().type == Tok::Equals) {
      advance();
      Expr rhs = parse_expr_rule();
      expect_end();
      return Equation{std::move(lhs), std::move(rhs)};
    }
    expect_end();
    return lhs;
  }

 private:
  const Token& peek() const { return tokens_[i_]; }
  const Token& advance() { return tokens_[i_++]; }

  void expect_end() {
    if (peek().type != Tok::End) {
      throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
    }
  }

  Expr parse_expr_rule() {
    Expr lhs = parse_term();
    while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
      bool add = advance().type == Tok::Plus;
      Expr rhs = parse_term();
      lhs = add ? Expr::sum(std::move(lhs), std::move(rhs))
                : Expr::difference(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    while (peek().type == Tok::Star || peek().type == Tok::Slash) {
      bool mul = advance().type == Tok::Star;
      Expr rhs = parse_unary();
      lhs = mul ? Expr::product(std::move(lhs), std::move(rhs))
                : Expr::quotient(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Expr parse_unary() {
    if (peek().type == Tok::Minus) {
      advance();
      return Expr::negate(parse_unary());
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (peek().type == Tok::Caret) {
      advance();
      Expr exponent = parse_unary();  // right-associative
      return Expr::gen_pow(std::move(base), std::move(exponent));
    }
    return base;
  }

  Expr parse_atom() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Number:
        advance();
        return Expr::rational(Rational::from_decimal(t.text));
      case Tok::LParen: {
        advance();
        Expr inner = parse_expr_rule();
        if (peek().type != Tok::RParen) {
          throw SyntaxError("expected ')'", peek().pos);
        }
        advance();
        return inner;
      }
      case Tok::Ident: {
        advance();
        if (t.text == "x") return Expr::var();
        if (t.text == "tau") return Expr::tau();
        if (auto f = func_from_name(t.text)) {
          if (peek().type != Tok::LParen) {
            throw SyntaxError("expected '(' after function name '" + t.text +
                                  "'",
                              peek().pos);
          }
          advance();
          Expr arg = parse_expr_rule();
          if (peek().type != Tok::RParen) {
            throw SyntaxError("expected ')'", peek().pos);
          }
          advance();
          return Expr::apply(*f, std::move(arg));
        }
        if (auto n = named_from_string(t.text)) return Expr::named(*n);
        throw UnknownFunction(t.text, t.pos);
      }
      case Tok::End:
        throw SyntaxError("unexpected end of input", t.pos);
      default:
        throw SyntaxError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t i_ = 0;
};

}  // namespace

Parsed parse(std::string_view text) { return Parser(text).run(); }

Expr parse_expr(std::string_view text) {
  Parsed p = parse(text);
  if (std::holds_alternative<Equation>(p)) {
    throw SyntaxError("expected an expression, found an equation",
                      text.find('='));
  }
  return std::get<Expr>(std::move(p));
}

Equation parse_equation(std::string_view text) {
  Parsed p = parse(text);
  if (std::holds_alternative<Expr>(p)) {
    throw SyntaxError("expected an equation containing '='", text.size());
  }
  return std::get<Equation>(std::move(p));
}

}  // namespace transcend
