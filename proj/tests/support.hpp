#pragma once

// Test-only generators and oracles. Nothing here calls the routines it is
// used to check: evaluation is pointwise, derivatives come from dual
// numbers, and Dir(P) is found by exhaustive candidate enumeration.

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "jung/bipoly.hpp"
#include "jung/newton.hpp"
#include "jung/parse.hpp"

namespace jung::testing {

inline BiPoly P(const char* text) { return parse_poly(text); }

inline Rational random_rational(std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int bound = 5) {
  for (;;) {
    Rational r = random_rational(rng, bound);
    if (r != 0) return r;
  }
}

inline BiPoly random_poly(std::mt19937_64& rng, int max_terms = 5, int max_exp = 4) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  BiPoly out;
  for (int n = count(rng); n > 0; --n) {
    const int i = exp(rng);
    const int j = exp(rng);
    out += BiPoly::monomial(random_rational(rng), i, j);
  }
  return out;
}

// d-homogeneous polynomial of d-degree `degree` with up to max_terms terms on
// the lattice line; may come out zero when the line has no lattice points.
inline BiPoly random_homogeneous(std::mt19937_64& rng, const Direction& d, std::int64_t degree,
                                 int max_terms = 4, std::int64_t box = 8) {
  std::vector<Monomial> line;
  for (std::int64_t i = 0; i <= box; ++i) {
    for (std::int64_t j = 0; j <= box; ++j) {
      if (d.rho() * i + d.sigma() * j == degree) line.push_back({i, j});
    }
  }
  BiPoly out;
  if (line.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, line.size() - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  for (int n = count(rng); n > 0; --n) {
    const Monomial m = line[pick(rng)];
    out += BiPoly::monomial(random_nonzero_rational(rng), m.i, m.j);
  }
  return out;
}

inline Rational eval(const BiPoly& p, const Rational& x, const Rational& y) {
  Rational acc = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::int64_t k = 0; k < m.i; ++k) t *= x;
    for (std::int64_t k = 0; k < m.j; ++k) t *= y;
    acc += t;
  }
  return acc;
}

// a + b*eps with eps^2 = 0.
struct Dual {
  Rational a, b;
};

inline Dual operator*(const Dual& u, const Dual& v) { return {u.a * v.a, u.a * v.b + u.b * v.a}; }

inline Dual eval_dual(const BiPoly& p, const Dual& x, const Dual& y) {
  Dual acc{0, 0};
  for (const auto& [m, c] : p.terms()) {
    Dual t{c, 0};
    for (std::int64_t k = 0; k < m.i; ++k) t = t * x;
    for (std::int64_t k = 0; k < m.j; ++k) t = t * y;
    acc.a += t.a;
    acc.b += t.b;
  }
  return acc;
}

// Value of the Jacobian determinant at (x, y), from dual-number derivatives.
inline Rational bracket_at(const BiPoly& p, const BiPoly& q, const Rational& x, const Rational& y) {
  const Rational px = eval_dual(p, {x, 1}, {y, 0}).b;
  const Rational py = eval_dual(p, {x, 0}, {y, 1}).b;
  const Rational qx = eval_dual(q, {x, 1}, {y, 0}).b;
  const Rational qy = eval_dual(q, {x, 0}, {y, 1}).b;
  return px * qy - py * qx;
}

// Every primitive d with #Supp(ell_d(P)) > 1. Such a d is orthogonal to the
// difference of two support points, so the pairwise normals (both signs)
// are an exhaustive candidate list.
inline std::set<Direction> brute_force_directions(const BiPoly& p) {
  std::vector<Monomial> pts;
  for (const auto& [m, c] : p.terms()) pts.push_back(m);
  std::set<Direction> out;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const std::int64_t di = pts[b].i - pts[a].i;
      const std::int64_t dj = pts[b].j - pts[a].j;
      for (int sign : {1, -1}) {
        const Direction d = Direction::primitive(sign * dj, -sign * di);
        std::int64_t top = kNegInf;
        for (const auto& m : pts) top = std::max(top, d.weight(m));
        int hits = 0;
        for (const auto& m : pts) hits += d.weight(m) == top;
        if (hits > 1) out.insert(d);
      }
    }
  }
  return out;
}

// Random support of between 1 and max_points distinct lattice points.
inline BiPoly random_support_poly(std::mt19937_64& rng, int max_points = 15, int box = 9) {
  std::uniform_int_distribution<int> count(1, max_points);
  std::uniform_int_distribution<int> coord(0, box);
  BiPoly out;
  const int n = count(rng);
  while (static_cast<int>(out.size()) < n) {
    out += BiPoly::monomial(random_nonzero_rational(rng), coord(rng), coord(rng));
  }
  return out;
}

}  // namespace jung::testing
