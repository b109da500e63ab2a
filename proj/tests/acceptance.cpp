// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "jung/cli.hpp"
#include "jung/decompose.hpp"
#include "jung/witness.hpp"
#include "support.hpp"

using namespace jung;
using jung::testing::P;

namespace {

constexpr int kSuiteSize = 200;
constexpr int kMaxMoves = 4;
constexpr int kMaxDeg = 3;
constexpr int kCoeffBound = 3;
constexpr double kSuiteSecondsLimit = 60.0;
constexpr int kCornerPairsPerDirection = 500;
constexpr int kChainRuleTriples = 100;
constexpr int kNewtonSupports = 300;
constexpr int kNewtonMaxPoints = 15;
constexpr int kOrbitExtra = 2;
constexpr int kNonExampleSteps = 10;

struct Outcome {
  bool pass;
  std::string detail;
};

struct SuiteCase {
  std::uint64_t seed;
  TameWord generated;
  AutoPair pair;
  std::variant<TameWord, Reject> result;
  DecomposeTrace trace;
  bool verified = false;
};

struct Suite {
  std::vector<SuiteCase> cases;
  double seconds = 0;
};

// Seeds 0..199; n_moves cycles 1..4 and max_deg 1..3, coefficient bound 3.
Suite build_suite() {
  Suite suite;
  const auto start = std::chrono::steady_clock::now();
  for (int s = 0; s < kSuiteSize; ++s) {
    SuiteCase c;
    c.seed = static_cast<std::uint64_t>(s);
    const int n_moves = 1 + s % kMaxMoves;
    const int max_deg = 1 + (s / kMaxMoves) % kMaxDeg;
    c.generated = random_tame_word(c.seed, n_moves, max_deg, kCoeffBound);
    c.pair = word_to_pair(c.generated);
    c.result = decompose(c.pair, &c.trace);
    if (const auto* w = std::get_if<TameWord>(&c.result)) c.verified = verify(*w, c.pair);
    suite.cases.push_back(std::move(c));
  }
  suite.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return suite;
}

Outcome round_trip(const Suite& suite) {
  int ok = 0;
  std::int64_t max_degree = 0;
  for (const auto& c : suite.cases) {
    ok += c.verified;
    max_degree = std::max(max_degree, total_degree(c.pair.p));
  }
  std::ostringstream d;
  d << ok << "/" << suite.cases.size() << " verified, max degree " << max_degree << ", "
    << suite.seconds << " s (limit " << kSuiteSecondsLimit << " s)";
  return {ok == static_cast<int>(suite.cases.size()) && suite.seconds < kSuiteSecondsLimit, d.str()};
}

Outcome worked_example(const Suite&) {
  const AutoPair pair{P("x+(y+x^2)^2"), P("y+x^2")};
  DecomposeTrace trace;
  const auto r = decompose(pair, &trace);
  if (!std::holds_alternative<TameWord>(r)) return {false, "rejected"};
  if (!verify(std::get<TameWord>(r), pair)) return {false, "word does not recompose the pair"};
  const auto first = std::find_if(trace.events.begin(), trace.events.end(),
                                  [](const auto& e) { return e.kind == TraceEvent::Kind::Reduce; });
  if (first == trace.events.end()) return {false, "no reduction step"};
  const auto& step = *first->step;
  const bool pass = step.direction == Direction(1, 2) && step.power.lambda == 1 &&
                    step.direction.sigma() == 2 && first->degree_before == 4 && first->degree_after == 2;
  std::ostringstream d;
  d << "first reduction direction (" << step.direction.rho() << "," << step.direction.sigma()
    << "), lambda " << to_string(step.power.lambda) << ", degree " << first->degree_before << " -> "
    << first->degree_after;
  return {pass, d.str()};
}

Outcome rejections(const Suite&) {
  auto reason_of = [](const AutoPair& pair) -> std::string {
    const auto r = decompose(pair);
    return std::holds_alternative<Reject>(r) ? std::string(reason_name(std::get<Reject>(r).reason)) : "accepted";
  };
  auto cli_run = [](std::vector<std::string> args, const std::string& in_text) {
    std::istringstream in(in_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return std::make_pair(code, err.str());
  };
  const std::string r1 = reason_of({P("x^2"), P("y")});
  const std::string r2 = reason_of({P("x+y^2"), P("y+x^2")});
  const bool bracket_ok = bracket(P("x+y^2"), P("y+x^2")) == P("1-4*x*y");
  const auto step = reduction_step(P("x^5+x"));
  const std::string r3 = std::holds_alternative<Reject>(step)
                             ? std::string(reason_name(std::get<Reject>(step).reason))
                             : "accepted";
  const auto c1 = cli_run({"jung", "decompose", "--pair", "-"}, R"({"P":"x^2","Q":"y"})");
  const auto c2 = cli_run({"jung", "decompose", "--pair", "-"}, R"({"P":"x+y^2","Q":"y+x^2"})");
  const auto c3 = cli_run({"jung", "reduce", "--poly", "x^5+x"}, "");
  const bool pass = r1 == "JacobianNotConstant" && r2 == "JacobianNotConstant" && bracket_ok &&
                    r3 == "PInUnivariate" && c1 == std::make_pair(1, std::string("JacobianNotConstant\n")) &&
                    c2 == std::make_pair(1, std::string("JacobianNotConstant\n")) &&
                    c3 == std::make_pair(1, std::string("PInUnivariate\n"));
  return {pass, r1 + ", " + r2 + ", " + r3 + "; CLI exit codes " + std::to_string(c1.first) + "/" +
                    std::to_string(c2.first) + "/" + std::to_string(c3.first)};
}

Outcome witness(const Suite& suite) {
  int steps = 0, failures = 0;
  for (const auto& c : suite.cases) {
    for (const auto& e : c.trace.events) {
      if (!e.step || e.step->edge_form.is_monomial()) continue;
      ++steps;
      const auto f = find_homogeneous_f(e.step->direction, e.step->edge_form);
      if (!f || bracket(*f, e.step->edge_form) != e.step->edge_form) {
        ++failures;
        continue;
      }
      const auto shape = check_witness_shape(*f, e.step->direction.sigma());
      if (!shape || shape->lambda != e.step->power.lambda) ++failures;
    }
  }
  std::ostringstream d;
  d << steps << " reduction steps checked, " << failures << " failures";
  return {failures == 0 && steps > 0, d.str()};
}

Outcome corner_identity(const Suite&) {
  const Direction dirs[] = {{1, 1}, {1, 2}, {2, 1}, {0, 1}};
  std::mt19937_64 rng(2024);
  std::ostringstream d;
  bool pass = true;
  for (const auto& dir : dirs) {
    std::uniform_int_distribution<int> degree(dir.rho() == 0 ? 0 : 1, dir.rho() == 0 ? 4 : 8);
    int checked = 0, holds = 0, attempts = 0;
    while (checked < kCornerPairsPerDirection && attempts < 200 * kCornerPairsPerDirection) {
      ++attempts;
      const BiPoly p = testing::random_homogeneous(rng, dir, degree(rng));
      const BiPoly q = testing::random_homogeneous(rng, dir, degree(rng));
      if (p.is_zero() || q.is_zero() || bracket(p, q).is_zero()) continue;
      ++checked;
      holds += check_corner_identity(dir, p, q);
    }
    pass = pass && checked == kCornerPairsPerDirection && holds == checked;
    d << "(" << dir.rho() << "," << dir.sigma() << ") " << holds << "/" << checked << "  ";
  }
  return {pass, d.str()};
}

Outcome chain_rule(const Suite&) {
  std::mt19937_64 rng(77);
  int holds = 0;
  for (int n = 0; n < kChainRuleTriples; ++n) {
    const TameWord w = random_tame_word(5000 + static_cast<std::uint64_t>(n), 1, kMaxDeg, kCoeffBound);
    holds += chain_rule_check(w.front(), testing::random_poly(rng), testing::random_poly(rng));
  }
  return {holds == kChainRuleTriples,
          std::to_string(holds) + "/" + std::to_string(kChainRuleTriples) + " triples"};
}

Outcome bracket_orbits(const Suite& suite) {
  int reached = 0, total = 0;
  for (const auto& c : suite.cases) {
    if (!std::holds_alternative<TameWord>(c.result)) continue;
    const AutoPair inverse = word_to_pair(word_inverse(std::get<TameWord>(c.result)));
    const auto ox = bracket_orbit(BiPoly::x(), c.pair.p, total_degree(inverse.p) + kOrbitExtra);
    const auto oy = bracket_orbit(BiPoly::y(), c.pair.p, total_degree(inverse.q) + kOrbitExtra);
    total += 2;
    reached += ox.reached_zero + oy.reached_zero;
  }
  const auto non = bracket_orbit(BiPoly::x(), P("x^2+y^2"), kNonExampleSteps);
  std::ostringstream d;
  d << reached << "/" << total << " orbits reached zero; x^2+y^2 "
    << (non.reached_zero ? "reached zero" : "did not reach zero") << " in " << kNonExampleSteps << " steps";
  return {reached == total && total == 2 * kSuiteSize && !non.reached_zero, d.str()};
}

Outcome newton_oracle(const Suite&) {
  std::mt19937_64 rng(314);
  int dir_ok = 0, corner_checks = 0, corner_ok = 0;
  for (int n = 0; n < kNewtonSupports; ++n) {
    const BiPoly p = testing::random_support_poly(rng, kNewtonMaxPoints);
    const auto dirs = directions(p);
    const std::set<Direction> as_set(dirs.begin(), dirs.end());
    dir_ok += as_set.size() == dirs.size() && as_set == testing::brute_force_directions(p);
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      const Direction& d1 = dirs[k];
      const Direction& d2 = dirs[(k + 1) % dirs.size()];
      if (cross(d1, d2) <= 0) continue;  // no arc shorter than a half circle
      const Direction mid = Direction::primitive(d1.rho() + d2.rho(), d1.sigma() + d2.sigma());
      ++corner_checks;
      const BiPoly lead = leading_form(mid, p);
      const Monomial en1 = st_en(d1, p).en;
      const Monomial st2 = st_en(d2, p).st;
      corner_ok += lead.is_monomial() && lead.terms().begin()->first == en1 && en1 == st2;
    }
  }
  std::ostringstream d;
  d << dir_ok << "/" << kNewtonSupports << " supports match brute force; " << corner_ok << "/"
    << corner_checks << " consecutive-direction corner checks";
  return {dir_ok == kNewtonSupports && corner_ok == corner_checks && corner_checks > 0, d.str()};
}

Outcome degree_descent(const Suite& suite) {
  int reductions = 0, violations = 0;
  for (const auto& c : suite.cases) {
    const auto& t = c.trace;
    for (std::size_t k = 0; k < t.events.size(); ++k) {
      const auto& e = t.events[k];
      if (e.kind == TraceEvent::Kind::Reduce) {
        ++reductions;
        violations += !(e.degree_after < e.degree_before);
      }
      if (k > 0 && e.kind == TraceEvent::Kind::Flip && t.events[k - 1].kind == TraceEvent::Kind::Flip) {
        ++violations;
      }
    }
    const auto bound = static_cast<std::size_t>(t.initial_degree) + 2 * t.flips();
    if (t.iterations() > bound) ++violations;
  }
  std::ostringstream d;
  d << reductions << " reductions, " << violations << " violations";
  return {violations == 0 && reductions > 0, d.str()};
}

}  // namespace

int main() {
  const Suite suite = build_suite();
  const std::vector<std::pair<std::string, std::function<Outcome(const Suite&)>>> criteria = {
      {"1 round-trip soundness", round_trip},
      {"2 worked example", worked_example},
      {"3 rejections", rejections},
      {"4 homogeneous witness", witness},
      {"5 corner identity", corner_identity},
      {"6 chain rule", chain_rule},
      {"7 bracket orbit", bracket_orbits},
      {"8 newton oracle", newton_oracle},
      {"9 degree descent", degree_descent},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o{false, ""};
    try {
      o = check(suite);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
