#include <cctype>

#include "tanlim/polyring.hpp"

namespace tanlim {

ParseError::ParseError(const std::string& msg, int l, int c)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg),
      line(l),
      column(c) {}

namespace {

struct Token {
  enum Kind { Number, Ident, Op, End } kind;
  std::string text;
  int line, column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : src_(s) {}

  Token next() {
    skip_space();
    Token t{Token::End, "", line_, col_};
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Number;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance(t.text);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        advance(t.text);
    } else if (std::string("+-*^/()").find(c) != std::string::npos) {
      t.kind = Token::Op;
      advance(t.text);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }
  void advance(std::string& out) {
    out += src_[pos_++];
    ++col_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& vars) : lex_(s), vars_(vars) {
    cur_ = lex_.next();
  }

  MPoly parse() {
    MPoly r = expr();
    if (cur_.kind != Token::End) fail("unexpected '" + cur_.text + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur_.line, cur_.column); }
  bool is_op(const char* op) const { return cur_.kind == Token::Op && cur_.text == op; }
  void take() { cur_ = lex_.next(); }

  MPoly expr() {
    MPoly r = term();
    while (is_op("+") || is_op("-")) {
      bool minus = is_op("-");
      take();
      MPoly t = term();
      if (minus) r -= t; else r += t;
    }
    return r;
  }

  MPoly term() {
    MPoly r = unary();
    while (is_op("*")) {
      take();
      r *= unary();
    }
    return r;
  }

  MPoly unary() {
    if (is_op("-")) {
      take();
      return -unary();
    }
    if (is_op("+")) {
      take();
      return unary();
    }
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (cur_.kind == Token::Number || cur_.kind == Token::Ident || is_op("("))
      fail("implicit multiplication is not allowed");
    if (is_op("^")) {
      take();
      if (cur_.kind != Token::Number) fail("exponent must be a non-negative integer");
      if (cur_.text.size() > 6) fail("exponent too large");
      unsigned k = static_cast<unsigned>(std::stoul(cur_.text));
      take();
      base = pow(base, k);
      if (is_op("^")) fail("chained exponents are ambiguous; use parentheses");
    }
    return base;
  }

  MPoly atom() {
    if (cur_.kind == Token::Number) {
      Int num(cur_.text);
      take();
      Int den = 1;
      if (is_op("/")) {
        take();
        if (cur_.kind != Token::Number) fail("expected denominator");
        den = Int(cur_.text);
        if (den == 0) fail("zero denominator");
        take();
      }
      Rat q(num, den);
      q.canonicalize();
      return MPoly::constant(vars_, q);
    }
    if (cur_.kind == Token::Ident) {
      MPoly probe(vars_);
      auto i = probe.find_var(cur_.text);
      if (!i) fail("unknown variable '" + cur_.text + "'");
      take();
      return MPoly::variable(vars_, *i);
    }
    if (is_op("(")) {
      take();
      MPoly r = expr();
      if (!is_op(")")) fail("expected ')'");
      take();
      return r;
    }
    if (cur_.kind == Token::End) fail("unexpected end of input");
    fail("unexpected '" + cur_.text + "'");
  }

  Lexer lex_;
  const std::vector<std::string>& vars_;
  Token cur_;
};

}  // namespace

MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

}  // namespace tanlim
