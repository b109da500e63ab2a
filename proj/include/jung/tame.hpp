#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "jung/bipoly.hpp"

namespace jung {

class SingularLinearError : public std::invalid_argument {
 public:
  SingularLinearError() : std::invalid_argument("SingularLinear") {}
};

// x -> x, y -> y + p(x)
struct ElemY {
  BiPoly p;
  friend bool operator==(const ElemY&, const ElemY&) = default;
};

// x -> x + q(y), y -> y
struct ElemX {
  BiPoly q;
  friend bool operator==(const ElemX&, const ElemX&) = default;
};

// x -> a*x + b*y, y -> c*x + d*y
struct Linear {
  Rational a, b, c, d;
  Rational det() const { return a * d - b * c; }
  friend bool operator==(const Linear&, const Linear&) = default;
};

// One tame generator. Construction through the factories checks the
// invariants: ElemY carries a polynomial in x only, ElemX one in y only,
// Linear an invertible matrix.
class TameMove {
 public:
  using Variant = std::variant<ElemY, ElemX, Linear>;

  static TameMove elem_y(BiPoly p);
  static TameMove elem_x(BiPoly q);
  static TameMove linear(Rational a, Rational b, Rational c, Rational d);
  static TameMove swap() { return linear(0, 1, 1, 0); }

  const Variant& value() const { return value_; }
  template <class T>
  const T* get_if() const { return std::get_if<T>(&value_); }

  BiPoly image_x() const;
  BiPoly image_y() const;

  friend bool operator==(const TameMove&, const TameMove&) = default;

 private:
  explicit TameMove(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

// g_1 o g_2 o ... o g_k as ring morphisms.
using TameWord = std::vector<TameMove>;

// Images of x and y under an endomorphism of Q[x,y].
struct AutoPair {
  BiPoly p;
  BiPoly q;
  friend bool operator==(const AutoPair&, const AutoPair&) = default;
};

inline AutoPair identity_pair() { return {BiPoly::x(), BiPoly::y()}; }

BiPoly apply_move(const TameMove& m, const BiPoly& p);

// (E(x), E(y)) for E = g_1 o ... o g_k, folded from the innermost factor out.
AutoPair word_to_pair(const TameWord& w);

// (f o g)(x), (f o g)(y) where f, g are given by their pairs.
AutoPair compose_pairs(const AutoPair& f, const AutoPair& g);

TameMove move_inverse(const TameMove& m);
TameWord word_inverse(const TameWord& w);

bool verify(const TameWord& w, const AutoPair& pair);

}  // namespace jung
