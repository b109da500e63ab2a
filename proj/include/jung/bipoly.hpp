#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "jung/rational.hpp"

namespace jung {

// Exponent pair (i, j) of the monomial x^i y^j.
struct Monomial {
  std::int64_t i = 0;
  std::int64_t j = 0;

  auto operator<=>(const Monomial&) const = default;
};

enum class Axis { X, Y };

// Degree of the zero polynomial.
inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();

// Sparse element of Q[x,y]. Terms are kept in ascending lexicographic order
// of (i, j) and no stored coefficient is zero.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  BiPoly() = default;
  explicit BiPoly(TermMap terms);

  static BiPoly constant(const Rational& c);
  static BiPoly monomial(const Rational& c, std::int64_t i, std::int64_t j);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Coefficient of x^i y^j (zero when absent).
  Rational coeff(const Monomial& m) const;
  Rational coeff(std::int64_t i, std::int64_t j) const { return coeff(Monomial{i, j}); }

  // Largest exponent of the given variable; kNegInf for zero.
  std::int64_t degree_in(Axis axis) const;
  // True when every term has j = 0 (resp. i = 0).
  bool only_in(Axis axis) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const Rational& scalar);

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  TermMap terms_;
};

BiPoly add(const BiPoly& p, const BiPoly& q);
BiPoly mul(const BiPoly& p, const BiPoly& q);
BiPoly pow(const BiPoly& p, unsigned exponent);

// P(X, Y): the image of P under the ring morphism x -> X, y -> Y.
BiPoly substitute(const BiPoly& p, const BiPoly& x_image, const BiPoly& y_image);

BiPoly partial(const BiPoly& p, Axis axis);

// Jacobian determinant [P, Q] = P_x Q_y - P_y Q_x.
BiPoly bracket(const BiPoly& p, const BiPoly& q);

// Max of i + j over the support; kNegInf for the zero polynomial.
std::int64_t total_degree(const BiPoly& p);

std::set<Monomial> support(const BiPoly& p);

// Canonical text, e.g. "y^2 + x + 2*x^2*y + x^4". The zero polynomial is "0".
std::string to_string(const BiPoly& p);

inline BiPoly operator+(BiPoly p, const BiPoly& q) { return p += q; }
inline BiPoly operator-(BiPoly p, const BiPoly& q) { return p -= q; }
inline BiPoly operator*(const BiPoly& p, const BiPoly& q) { return mul(p, q); }
inline BiPoly operator*(BiPoly p, const Rational& c) { return p *= c; }
inline BiPoly operator*(const Rational& c, BiPoly p) { return p *= c; }

}  // namespace jung
