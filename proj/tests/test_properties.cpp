#include <doctest.h>

#include "jung/decompose.hpp"
#include "jung/witness.hpp"
#include "support.hpp"

using namespace jung;

TEST_SUITE("properties") {
  TEST_CASE("ring axioms") {
    std::mt19937_64 rng(101);
    for (int n = 0; n < 100; ++n) {
      const BiPoly a = testing::random_poly(rng), b = testing::random_poly(rng), c = testing::random_poly(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
    }
  }

  TEST_CASE("bracket is antisymmetric, kills constants and obeys Leibniz") {
    std::mt19937_64 rng(103);
    for (int n = 0; n < 100; ++n) {
      const BiPoly p = testing::random_poly(rng), q = testing::random_poly(rng), r = testing::random_poly(rng);
      CHECK(bracket(p, q) == -bracket(q, p));
      CHECK(bracket(p, BiPoly::constant(testing::random_rational(rng))).is_zero());
      CHECK(bracket(p * q, r) == p * bracket(q, r) + q * bracket(p, r));
    }
  }

  TEST_CASE("substitute is a ring morphism") {
    std::mt19937_64 rng(107);
    for (int n = 0; n < 60; ++n) {
      const BiPoly p = testing::random_poly(rng), q = testing::random_poly(rng);
      const BiPoly xi = testing::random_poly(rng, 3, 2), yi = testing::random_poly(rng, 3, 2);
      CHECK(substitute(p + q, xi, yi) == substitute(p, xi, yi) + substitute(q, xi, yi));
      CHECK(substitute(p * q, xi, yi) == substitute(p, xi, yi) * substitute(q, xi, yi));
    }
  }

  TEST_CASE("total degree is additive") {
    std::mt19937_64 rng(109);
    for (int n = 0; n < 100; ++n) {
      const BiPoly p = testing::random_poly(rng), q = testing::random_poly(rng);
      if (p.is_zero() || q.is_zero()) continue;
      CHECK(total_degree(p * q) == total_degree(p) + total_degree(q));
    }
  }

  TEST_CASE("generated pairs have constant nonzero Jacobian and satisfy the chain rule") {
    std::mt19937_64 rng(113);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const TameWord w = random_tame_word(seed, 3, 3, 3);
      const AutoPair pair = word_to_pair(w);
      const BiPoly j = bracket(pair.p, pair.q);
      CHECK(j.is_constant());
      CHECK_FALSE(j.is_zero());
      for (const auto& m : w) {
        CHECK(chain_rule_check(m, testing::random_poly(rng), testing::random_poly(rng)));
      }
    }
  }

  TEST_CASE("group laws") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const TameWord w = random_tame_word(seed, 1 + static_cast<int>(seed % 4), 3, 3);
      TameWord left = word_inverse(w);
      left.insert(left.end(), w.begin(), w.end());
      CHECK(verify(left, identity_pair()));
      TameWord right = w;
      const TameWord inv = word_inverse(w);
      right.insert(right.end(), inv.begin(), inv.end());
      CHECK(verify(right, identity_pair()));
    }
  }

  TEST_CASE("decomposition of a composition of generated words") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      TameWord w = random_tame_word(seed, 2, 2, 2);
      const TameWord v = random_tame_word(seed + 1000, 2, 2, 2);
      w.insert(w.end(), v.begin(), v.end());
      const AutoPair pair = word_to_pair(w);
      const auto r = decompose(pair);
      REQUIRE(std::holds_alternative<TameWord>(r));
      CHECK(verify(std::get<TameWord>(r), pair));
      const auto inv = invert(pair);
      REQUIRE(std::holds_alternative<AutoPair>(inv));
      CHECK(compose_pairs(pair, std::get<AutoPair>(inv)) == identity_pair());
    }
  }

  TEST_CASE("perturbed automorphisms are rejected, never mis-decomposed") {
    std::mt19937_64 rng(127);
    int rejected = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      AutoPair pair = word_to_pair(random_tame_word(seed, 3, 3, 3));
      pair.q += testing::random_poly(rng, 2, 3);
      const auto r = decompose(pair);
      if (const auto* w = std::get_if<TameWord>(&r)) {
        CHECK(verify(*w, pair));
      } else {
        ++rejected;
      }
    }
    CHECK(rejected > 0);
  }

  TEST_CASE("Dir(P) matches brute force and consecutive corners meet") {
    std::mt19937_64 rng(131);
    for (int n = 0; n < 100; ++n) {
      const BiPoly p = testing::random_support_poly(rng);
      const auto dirs = directions(p);
      CHECK(std::set<Direction>(dirs.begin(), dirs.end()) == testing::brute_force_directions(p));
      for (std::size_t k = 0; k < dirs.size(); ++k) {
        const Direction& d1 = dirs[k];
        const Direction& d2 = dirs[(k + 1) % dirs.size()];
        if (cross(d1, d2) <= 0) continue;
        CHECK(st_en(d1, p).en == st_en(d2, p).st);
      }
    }
  }
}
