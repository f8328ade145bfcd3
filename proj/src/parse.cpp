#include <cctype>

#include "geocrystal/error.hpp"
#include "geocrystal/ratfun.hpp"

namespace geocrystal {

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/') unary)*
// unary  := ('-' | '+') unary | power
// power  := primary ('^' ['-'] integer)?
// primary:= integer | identifier | '(' expr ')'
// identifiers: [A-Za-z_][A-Za-z0-9_]* with an optional bracketed suffix such as a[1,2].
class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFun parse_all() {
    RatFun r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFun expr() {
    RatFun r = term();
    for (;;) {
      if (accept('+')) r = r + term();
      else if (accept('-')) r = r - term();
      else return r;
    }
  }

  RatFun term() {
    RatFun r = unary();
    for (;;) {
      if (accept('*')) r = r * unary();
      else if (accept('/')) {
        RatFun d = unary();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else return r;
    }
  }

  RatFun unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFun power() {
    RatFun base = primary();
    if (accept('^')) {
      bool neg = accept('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (neg && base.is_zero()) fail("zero to a negative power");
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  RatFun primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFun r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFun(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '[') {
        while (pos_ < s_.size() && s_[pos_] != ']') {
          char d = s_[pos_];
          if (!(d == '[' || d == ',' || std::isdigit(static_cast<unsigned char>(d)))) fail("bad index suffix");
          ++pos_;
        }
        if (pos_ == s_.size()) fail("unterminated index suffix");
        ++pos_;
      }
      return RatFun::variable(std::string(s_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

RatFun RatFun::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace geocrystal
