#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jung/bipoly.hpp"

namespace jung {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NegativeExponentError : public ParseError {
 public:
  explicit NegativeExponentError(std::size_t position);
};

// Grammar (whitespace ignored, no implicit multiplication):
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | 'x' | 'y' | '(' expr ')'
BiPoly parse_poly(std::string_view text);

}  // namespace jung
