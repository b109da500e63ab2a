#include <random>

#include "jung/witness.hpp"

namespace jung {

namespace {

enum class Kind { ElemY, ElemX, Linear };

class MoveSampler {
 public:
  MoveSampler(std::uint64_t seed, int max_deg, int coeff_bound)
      : rng_(seed), max_deg_(max_deg), coeff_bound_(coeff_bound) {}

  Kind next_kind(std::optional<Kind> previous) {
    std::vector<Kind> choices;
    for (Kind k : {Kind::ElemY, Kind::ElemX, Kind::Linear}) {
      if (!previous || k != *previous) choices.push_back(k);
    }
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    return choices[pick(rng_)];
  }

  // Univariate polynomial in the given variable, degree in [1, max_deg].
  BiPoly univariate(Axis var) {
    std::uniform_int_distribution<int> degree(1, max_deg_);
    const int deg = degree(rng_);
    BiPoly out;
    for (int k = 0; k < deg; ++k) out += term(var, coefficient(), k);
    return out + term(var, nonzero_coefficient(), deg);
  }

  TameMove linear() {
    for (;;) {
      Rational a = coefficient(), b = coefficient(), c = coefficient(), d = coefficient();
      if (a * d - b * c != 0) return TameMove::linear(a, b, c, d);
    }
  }

 private:
  static BiPoly term(Axis var, long c, int k) {
    return var == Axis::X ? BiPoly::monomial(c, k, 0) : BiPoly::monomial(c, 0, k);
  }

  long coefficient() {
    std::uniform_int_distribution<long> dist(-coeff_bound_, coeff_bound_);
    return dist(rng_);
  }

  long nonzero_coefficient() {
    for (;;) {
      const long c = coefficient();
      if (c != 0) return c;
    }
  }

  std::mt19937_64 rng_;
  int max_deg_;
  int coeff_bound_;
};

}  // namespace

TameWord random_tame_word(std::uint64_t seed, int n_moves, int max_deg, int coeff_bound) {
  if (n_moves < 0 || max_deg < 1 || coeff_bound < 1) {
    throw std::invalid_argument("random_tame_word needs n_moves >= 0, max_deg >= 1, coeff_bound >= 1");
  }
  MoveSampler sampler(seed, max_deg, coeff_bound);
  TameWord word;
  std::optional<Kind> previous;
  for (int k = 0; k < n_moves; ++k) {
    const Kind kind = sampler.next_kind(previous);
    switch (kind) {
      case Kind::ElemY: word.push_back(TameMove::elem_y(sampler.univariate(Axis::X))); break;
      case Kind::ElemX: word.push_back(TameMove::elem_x(sampler.univariate(Axis::Y))); break;
      case Kind::Linear: word.push_back(sampler.linear()); break;
    }
    previous = kind;
  }
  return word;
}

}  // namespace jung
