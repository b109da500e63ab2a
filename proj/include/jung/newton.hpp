#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jung/bipoly.hpp"

namespace jung {

// Thrown when an operation that needs a nonzero polynomial gets zero.
class ZeroPolynomialError : public std::invalid_argument {
 public:
  ZeroPolynomialError() : std::invalid_argument("ZeroPolynomial") {}
};

// Primitive integer vector (rho, sigma) defining the weight rho*i + sigma*j.
class Direction {
 public:
  // Throws std::invalid_argument unless gcd(rho, sigma) == 1.
  Direction(std::int64_t rho, std::int64_t sigma);

  // Divides out the gcd; (0, 0) is rejected.
  static Direction primitive(std::int64_t a, std::int64_t b);

  std::int64_t rho() const { return rho_; }
  std::int64_t sigma() const { return sigma_; }
  std::int64_t weight(const Monomial& m) const { return rho_ * m.i + sigma_ * m.j; }

  auto operator<=>(const Direction&) const = default;

 private:
  std::int64_t rho_;
  std::int64_t sigma_;
};

// Convex hull of a support set. Vertices run counterclockwise from the
// lowest vertex (smallest j, then smallest i), with no three consecutive
// collinear.
// A single point or a segment (two endpoints) are the degenerate cases.
struct LatticePolygon {
  std::vector<Monomial> vertices;
};

std::int64_t cross(std::int64_t a1, std::int64_t a2, std::int64_t b1, std::int64_t b2);
inline std::int64_t cross(const Direction& a, const Direction& b) {
  return cross(a.rho(), a.sigma(), b.rho(), b.sigma());
}
inline std::int64_t cross(const Monomial& a, const Monomial& b) { return cross(a.i, a.j, b.i, b.j); }

// Counterclockwise order, valid when both lie in an arc shorter than a half circle.
inline bool dir_less(const Direction& a, const Direction& b) { return cross(a, b) > 0; }

std::int64_t vdeg(const Direction& d, const BiPoly& p);
BiPoly leading_form(const Direction& d, const BiPoly& p);

// True when P equals its own leading form for d (zero counts as homogeneous).
bool is_homogeneous(const Direction& d, const BiPoly& p);

LatticePolygon hull(const std::vector<Monomial>& points);
LatticePolygon hull(const BiPoly& p);

// Outward primitive normals of the hull edges, in counterclockwise edge order
// starting with the edge that leaves the lowest vertex; equivalently sorted
// counterclockwise from (0,-1) inclusive.
std::vector<Direction> directions(const BiPoly& p);

struct Corners {
  Monomial st;
  Monomial en;
};

// First and last support point of the d-leading form along the
// counterclockwise tangent (-sigma, rho).
Corners st_en(const Direction& d, const BiPoly& p);

class MonomialInputError : public std::invalid_argument {
 public:
  MonomialInputError() : std::invalid_argument("MonomialInput") {}
};

class DirContains11Error : public std::invalid_argument {
 public:
  DirContains11Error() : std::invalid_argument("DirContains11") {}
};

// First element of Dir(P) met counterclockwise after (1,1), restricted to the
// open arc from (1,1) to (-1,-1). Empty when that arc holds no direction.
std::optional<Direction> succ(const BiPoly& p);

}  // namespace jung
