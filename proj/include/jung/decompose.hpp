#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "jung/bipoly.hpp"
#include "jung/newton.hpp"
#include "jung/tame.hpp"

namespace jung {

// Why a pair was rejected. Each reason is a property every automorphism of
// Q[x,y] has and the input lacks.
enum class RejectReason {
  JacobianNotConstant,  // [P,Q] must be a nonzero constant
  MonomialImage,        // P = c*x^a with a >= 2 has non-constant Jacobian with anything
  MixedInfinity,        // the (1,1)-leading form must be a power of one linear form
  RhoNotOne,            // the successor of (1,1) must be (1, sigma)
  NotLinearPower,       // the edge polynomial must be mu*(w + lambda)^N
  PInUnivariate,        // P in Q[x] of degree >= 2
  SecondCoordinate,     // once P = x, Q must be lambda*y + q(x)
};

std::string_view reason_name(RejectReason r);

struct Reject {
  RejectReason reason;
  friend bool operator==(const Reject&, const Reject&) = default;
};

// x^a * p(z) with z = y * x^(-sigma); coeffs[k] multiplies z^k.
struct EdgePolynomial {
  std::int64_t a = 0;
  std::int64_t sigma = 1;
  std::vector<Rational> coeffs;

  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
};

struct AxisX {
  std::int64_t a;
};
struct AxisY {
  std::int64_t a;
};
// mu * (x - lambda*y)^a
struct LinearPower {
  Rational mu;
  Rational lambda;
  std::int64_t a;
};
struct Mixed {};

using LeadClass = std::variant<AxisX, AxisY, LinearPower, Mixed>;

class ConstantInputError : public std::invalid_argument {
 public:
  ConstantInputError() : std::invalid_argument("ConstantInput") {}
};
class RhoNotOneError : public std::invalid_argument {
 public:
  RhoNotOneError() : std::invalid_argument("RhoNotOne") {}
};
class StNotOnAxisError : public std::invalid_argument {
 public:
  StNotOnAxisError() : std::invalid_argument("StNotOnAxis") {}
};
class ConstantProfileError : public std::invalid_argument {
 public:
  ConstantProfileError() : std::invalid_argument("ConstantProfile") {}
};

LeadClass classify_leading(const BiPoly& p);

EdgePolynomial edge_profile(const Direction& d, const BiPoly& p);

struct PerfectPower {
  Rational mu;
  Rational lambda;
  std::int64_t n;
};

// Matches p(w) = mu * (w + lambda)^N with lambda != 0.
std::optional<PerfectPower> perfect_power_test(const EdgePolynomial& p);

struct ReductionStep {
  TameMove move;  // ElemY(-lambda * x^sigma)
  BiPoly reduced;
  Direction direction;
  EdgePolynomial edge;
  PerfectPower power;
  BiPoly edge_form;  // leading form of P for `direction`
};

// One degree-lowering elementary move for P with (1,1)-leading form c*x^a,
// a >= 2, P not a monomial.
std::variant<ReductionStep, Reject> reduction_step(const BiPoly& p);

// Per-iteration record of the decomposition loop.
struct TraceEvent {
  enum class Kind { Flip, Shear, Reduce } kind;
  std::int64_t degree_before;
  std::int64_t degree_after;
  std::optional<ReductionStep> step;  // set for Reduce
};

struct DecomposeTrace {
  std::int64_t initial_degree = 0;
  std::vector<TraceEvent> events;

  std::size_t iterations() const { return events.size(); }
  std::size_t flips() const;
};

// Writes the pair as a word W with word_to_pair(W) == pair, or explains why
// no such word exists.
std::variant<TameWord, Reject> decompose(const AutoPair& pair, DecomposeTrace* trace = nullptr);

// Inverse automorphism, through decompose.
std::variant<AutoPair, Reject> invert(const AutoPair& pair);

}  // namespace jung
