#include "npscan/parse.hpp"

#include <cctype>
#include <sstream>

#include "npscan/dickson.hpp"
#include "npscan/errors.hpp"

namespace npscan {

namespace {

bool looks_like_coefficient_list(const std::string& s) {
  if (s.find(',') == std::string::npos) return false;
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == ',' || ch == '/' || ch == '-' || ch == '+' ||
          std::isspace(static_cast<unsigned char>(ch)))) {
      return false;
    }
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  QPoly parse() {
    QPoly result = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  QPoly expr() {
    QPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char ch = s_[pos_];
    return ch == 'x' || ch == '(' || ch == 'd' || std::isdigit(static_cast<unsigned char>(ch));
  }

  // implicit multiplication allows "3x^2"
  QPoly term() {
    QPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  QPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  QPoly power() {
    QPoly base = primary();
    if (accept('^')) {
      skip();
      const BigInt e = integer();
      if (e > 4096) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  BigInt integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(s_.substr(start, pos_ - start));
  }

  Rational rational_literal() {
    skip();
    bool negative = accept('-');
    BigInt num = integer();
    BigInt den = 1;
    if (accept('/')) {
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    Rational r(num, den);
    return negative ? Rational(-r) : r;
  }

  QPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char ch = s_[pos_];
    if (ch == 'x') {
      ++pos_;
      return QPoly::x();
    }
    if (ch == '(') {
      ++pos_;
      QPoly inner = expr();
      expect(')');
      return inner;
    }
    if (s_.compare(pos_, 7, "dickson") == 0) {
      pos_ += 7;
      expect('(');
      const BigInt n = integer();
      if (n > 4096) fail("Dickson degree too large");
      expect(',');
      const Rational a = rational_literal();
      expect(')');
      return dickson(static_cast<unsigned>(n), a);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return QPoly::constant(Rational(integer()));
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_polynomial(const std::string& text) {
  if (looks_like_coefficient_list(text)) {
    std::vector<Rational> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
    return QPoly(std::move(coeffs));
  }
  return Parser(text).parse();
}

}  // namespace npscan
