#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "jung/bipoly.hpp"
#include "jung/newton.hpp"
#include "jung/tame.hpp"

namespace jung {

class NonHomogeneousInputError : public std::invalid_argument {
 public:
  NonHomogeneousInputError() : std::invalid_argument("NonHomogeneousInput") {}
};

class ZeroBracketError : public std::invalid_argument {
 public:
  ZeroBracketError() : std::invalid_argument("ZeroBracket") {}
};

// Solves [F, ell] = ell for a d-homogeneous F of d-degree rho + sigma.
//
// The unknowns are the coefficients of F on the lattice points (i, j) >= 0
// with rho*i + sigma*j = rho + sigma. When rho or sigma is not positive that
// line holds infinitely many points; the candidates are then cut to
// i <= deg_x(ell) + 1, j <= deg_y(ell) + 1. Free unknowns are zeroed in
// ascending (i, j) order, so the answer is deterministic. Empty when no F
// exists on the candidate support.
std::optional<BiPoly> find_homogeneous_f(const Direction& d, const BiPoly& ell);

struct WitnessShape {
  Rational mu;
  Rational lambda;
};

// Matches F = mu*x*(y + lambda*x^sigma) with mu != 0. lambda is zero exactly
// when F = mu*x*y.
std::optional<WitnessShape> check_witness_shape(const BiPoly& f, std::int64_t sigma);

struct OrbitReport {
  std::vector<BiPoly> terms;  // R_0, R_1, ... with R_{k+1} = [R_k, P]
  bool reached_zero = false;
  std::int64_t steps = 0;  // brackets taken
};

OrbitReport bracket_orbit(const BiPoly& r0, const BiPoly& p, std::int64_t max_steps);

// Checks both corner biconditionals for ell_d(P), ell_d(Q) and their bracket
// R: st(P) and st(Q) not aligned <=> st(P) + st(Q) - (1,1) = st(R), and the
// same for en. Throws ZeroBracketError when R = 0.
bool check_corner_identity(const Direction& d, const BiPoly& p, const BiPoly& q);

// [m(P), m(Q)] == m([P,Q]) * [m(x), m(y)]
bool chain_rule_check(const TameMove& m, const BiPoly& p, const BiPoly& q);

// Deterministic in the seed (std::mt19937_64). Consecutive moves have
// different kinds; elementary polynomials have degree in [1, max_deg] and
// integer coefficients in [-coeff_bound, coeff_bound] with nonzero leading
// coefficient; linear moves have integer entries in the same range and
// nonzero determinant.
TameWord random_tame_word(std::uint64_t seed, int n_moves, int max_deg, int coeff_bound);

}  // namespace jung
