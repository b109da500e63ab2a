#include "jung/parse.hpp"

#include <cctype>

namespace jung {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("ParseError at position " + std::to_string(position) + ": " + message),
      position_(position) {}

NegativeExponentError::NegativeExponentError(std::size_t position)
    : ParseError(position, "NegativeExponent") {}

namespace {

constexpr long kMaxExponent = 1 << 16;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BiPoly parse() {
    BiPoly out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    while (accept('*')) acc = mul(acc, unary());
    return acc;
  }

  BiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BiPoly power() {
    BiPoly base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) throw NegativeExponentError(at);
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a nonnegative integer exponent");
    }
    const Integer e = digits();
    if (e > kMaxExponent) throw ParseError(at, "exponent too large");
    return pow(base, static_cast<unsigned>(e.get_ui()));
  }

  BiPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      return c == 'x' ? BiPoly::x() : BiPoly::y();
    }
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num = digits();
      Integer den = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected a denominator");
        }
        den = digits();
        if (den == 0) throw ParseError(at, "zero denominator");
      }
      Rational value(num, den);
      value.canonicalize();
      return BiPoly::constant(value);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace jung
