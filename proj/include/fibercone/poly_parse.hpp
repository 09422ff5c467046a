#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "fibercone/errors.hpp"
#include "fibercone/polynomial.hpp"

namespace fibercone {

struct Token {
  enum Kind { Ident, Number, Symbol, End } kind;
  std::string text;
  int line, col;
};

/// Shared tokenizer for the input DSL and standalone polynomial strings.
class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string got = tok_.kind == Token::End ? "end of input"
                                              : "'" + tok_.text + "'";
    throw ParseError(tok_.line, tok_.col, expected, got);
  }

  Token expect_symbol(char c) {
    if (tok_.kind != Token::Symbol || tok_.text[0] != c)
      fail(std::string("'") + c + "'");
    return take();
  }

  bool at_symbol(char c) const {
    return tok_.kind == Token::Symbol && tok_.text[0] == c;
  }

 private:
  void advance() {
    while (pos_ < s_.size() &&
           (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' ||
            s_[pos_] == '\r' || s_[pos_] == '#')) {
      if (s_[pos_] == '#') {  // line comment
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
        continue;
      }
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_ = {Token::End, "", line_, col_};
      return;
    }
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_'))
        consume();
      tok_ = {Token::Ident, s_.substr(start, pos_ - start), tok_.line,
              tok_.col};
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        consume();
      tok_ = {Token::Number, s_.substr(start, pos_ - start), tok_.line,
              tok_.col};
    } else {
      consume();
      tok_ = {Token::Symbol, std::string(1, c), tok_.line, tok_.col};
    }
  }

  void consume() {
    ++pos_;
    ++col_;
  }

  std::string s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_{Token::End, "", 1, 1};
};

/// Recursive-descent polynomial parser over a declared variable list.
/// Grammar: expr := ['-'] term (('+'|'-') term)*
///          term := power (['*'] power)*          (juxtaposition multiplies)
///          power := atom ['^' number]
///          atom := number ['/' number] | var | '(' expr ')'
template <Field F>
class PolynomialParser {
 public:
  PolynomialParser(Lexer& lex, const std::vector<std::string>& vars,
                   const typename F::Spec& spec, MonomialOrder ord)
      : lex_(lex), vars_(vars), spec_(spec), ord_(ord) {}

  Polynomial<F> parse() { return expr(); }

 private:
  using Poly = Polynomial<F>;

  Poly expr() {
    bool neg = false;
    if (lex_.at_symbol('-')) {
      lex_.take();
      neg = true;
    }
    Poly acc = term();
    if (neg) acc = -acc;
    while (lex_.at_symbol('+') || lex_.at_symbol('-')) {
      bool minus = lex_.take().text[0] == '-';
      Poly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  bool starts_atom() const {
    const Token& t = lex_.peek();
    return t.kind == Token::Number || t.kind == Token::Ident ||
           (t.kind == Token::Symbol && t.text[0] == '(');
  }

  Poly term() {
    Poly acc = power();
    for (;;) {
      if (lex_.at_symbol('*')) {
        lex_.take();
        acc = acc * power();
      } else if (starts_atom()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Poly power() {
    Poly base = atom();
    if (lex_.at_symbol('^')) {
      lex_.take();
      if (lex_.peek().kind != Token::Number) lex_.fail("exponent");
      long long e = std::stoll(lex_.take().text);
      Poly acc = Poly::constant(vars_.size(), ord_, F::one(spec_));
      for (long long i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  Poly atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Number) {
      long long num = std::stoll(lex_.take().text);
      F c = F::from_long(num, spec_);
      if (lex_.at_symbol('/')) {
        lex_.take();
        if (lex_.peek().kind != Token::Number) lex_.fail("denominator");
        long long den = std::stoll(lex_.take().text);
        F d = F::from_long(den, spec_);
        if (d.is_zero()) lex_.fail("nonzero denominator");
        c = c / d;
      }
      return Poly::constant(vars_.size(), ord_, c);
    }
    if (t.kind == Token::Ident) {
      Token v = lex_.take();
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == v.text) {
          std::vector<std::uint32_t> e(vars_.size(), 0);
          e[i] = 1;
          return Poly::monomial(vars_.size(), ord_, Monomial(std::move(e)),
                                F::one(spec_));
        }
      }
      throw ParseError(v.line, v.col, "declared variable",
                       "'" + v.text + "'");
    }
    if (lex_.at_symbol('(')) {
      lex_.take();
      Poly inner = expr();
      lex_.expect_symbol(')');
      return inner;
    }
    lex_.fail("coefficient, variable or '('");
  }

  Lexer& lex_;
  const std::vector<std::string>& vars_;
  const typename F::Spec& spec_;
  MonomialOrder ord_;
};

/// Parse one full polynomial string; rejects trailing input.
template <Field F>
Polynomial<F> parse_polynomial(const std::string& text,
                               const std::vector<std::string>& vars,
                               const typename F::Spec& spec,
                               MonomialOrder ord = MonomialOrder::degrevlex()) {
  Lexer lex(text);
  PolynomialParser<F> p(lex, vars, spec, ord);
  Polynomial<F> out = p.parse();
  if (lex.peek().kind != Token::End) lex.fail("end of polynomial");
  return out;
}

}  // namespace fibercone
