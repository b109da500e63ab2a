#include "jung/witness.hpp"

#include <algorithm>
#include <map>

#include "jung/linsolve.hpp"

namespace jung {

namespace {

std::vector<Monomial> witness_candidates(const Direction& d, const BiPoly& ell) {
  const std::int64_t target = d.rho() + d.sigma();
  std::vector<Monomial> out;
  if (d.rho() > 0 && d.sigma() > 0) {
    for (std::int64_t i = 0; d.rho() * i <= target; ++i) {
      const std::int64_t rest = target - d.rho() * i;
      if (rest % d.sigma() == 0) out.push_back({i, rest / d.sigma()});
    }
  } else {
    const std::int64_t max_i = std::max<std::int64_t>(ell.degree_in(Axis::X), 0) + 1;
    const std::int64_t max_j = std::max<std::int64_t>(ell.degree_in(Axis::Y), 0) + 1;
    for (std::int64_t i = 0; i <= max_i; ++i) {
      for (std::int64_t j = 0; j <= max_j; ++j) {
        if (d.rho() * i + d.sigma() * j == target) out.push_back({i, j});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<BiPoly> find_homogeneous_f(const Direction& d, const BiPoly& ell) {
  if (d.rho() + d.sigma() <= 0) throw std::invalid_argument("need rho + sigma > 0");
  if (ell.is_zero()) throw ZeroPolynomialError();
  if (!is_homogeneous(d, ell)) throw NonHomogeneousInputError();

  const std::vector<Monomial> unknowns = witness_candidates(d, ell);
  std::vector<BiPoly> columns;
  std::map<Monomial, std::size_t> row_of;
  for (const auto& [m, c] : ell.terms()) row_of.emplace(m, 0);
  for (const auto& u : unknowns) {
    columns.push_back(bracket(BiPoly::monomial(1, u.i, u.j), ell));
    for (const auto& [m, c] : columns.back().terms()) row_of.emplace(m, 0);
  }
  std::size_t next = 0;
  for (auto& [m, row] : row_of) row = next++;

  RationalMatrix a(row_of.size(), unknowns.size());
  std::vector<Rational> rhs(row_of.size());
  for (std::size_t col = 0; col < columns.size(); ++col) {
    for (const auto& [m, c] : columns[col].terms()) a(row_of.at(m), col) = c;
  }
  for (const auto& [m, c] : ell.terms()) rhs[row_of.at(m)] = c;

  const auto solution = solve_linear(std::move(a), std::move(rhs));
  if (!solution) return std::nullopt;
  BiPoly::TermMap f;
  for (std::size_t k = 0; k < unknowns.size(); ++k) f.emplace(unknowns[k], (*solution)[k]);
  return BiPoly(std::move(f));
}

std::optional<WitnessShape> check_witness_shape(const BiPoly& f, std::int64_t sigma) {
  const Rational mu = f.coeff(1, 1);
  if (mu == 0) return std::nullopt;
  if (f.size() == 1) return WitnessShape{mu, 0};
  if (sigma < 0 || f.size() != 2) return std::nullopt;
  const Rational top = f.coeff(sigma + 1, 0);
  if (top == 0) return std::nullopt;
  return WitnessShape{mu, top / mu};
}

OrbitReport bracket_orbit(const BiPoly& r0, const BiPoly& p, std::int64_t max_steps) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be positive");
  OrbitReport report;
  report.terms.push_back(r0);
  if (r0.is_zero()) {
    report.reached_zero = true;
    return report;
  }
  while (report.steps < max_steps) {
    report.terms.push_back(bracket(report.terms.back(), p));
    ++report.steps;
    if (report.terms.back().is_zero()) {
      report.reached_zero = true;
      break;
    }
  }
  return report;
}

bool check_corner_identity(const Direction& d, const BiPoly& p, const BiPoly& q) {
  const BiPoly lp = leading_form(d, p);
  const BiPoly lq = leading_form(d, q);
  const BiPoly r = bracket(lp, lq);
  if (r.is_zero()) throw ZeroBracketError();
  const Corners cp = st_en(d, lp);
  const Corners cq = st_en(d, lq);
  const Corners cr = st_en(d, r);
  auto holds = [](const Monomial& a, const Monomial& b, const Monomial& c) {
    const bool not_aligned = cross(a, b) != 0;
    const bool sum_matches = Monomial{a.i + b.i - 1, a.j + b.j - 1} == c;
    return not_aligned == sum_matches;
  };
  return holds(cp.st, cq.st, cr.st) && holds(cp.en, cq.en, cr.en);
}

bool chain_rule_check(const TameMove& m, const BiPoly& p, const BiPoly& q) {
  const BiPoly lhs = bracket(apply_move(m, p), apply_move(m, q));
  const BiPoly rhs = mul(apply_move(m, bracket(p, q)), bracket(m.image_x(), m.image_y()));
  return lhs == rhs;
}

}  // namespace jung
