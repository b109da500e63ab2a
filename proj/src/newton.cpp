#include "jung/newton.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace jung {

Direction::Direction(std::int64_t rho, std::int64_t sigma) : rho_(rho), sigma_(sigma) {
  if (std::gcd(rho, sigma) != 1) throw std::invalid_argument("direction must be primitive");
}

Direction Direction::primitive(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  if (g == 0) throw std::invalid_argument("zero vector has no direction");
  return Direction(a / g, b / g);
}

std::int64_t cross(std::int64_t a1, std::int64_t a2, std::int64_t b1, std::int64_t b2) {
  return a1 * b2 - a2 * b1;
}

std::int64_t vdeg(const Direction& d, const BiPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  std::int64_t best = kNegInf;
  for (const auto& [m, c] : p.terms()) best = std::max(best, d.weight(m));
  return best;
}

BiPoly leading_form(const Direction& d, const BiPoly& p) {
  const std::int64_t top = vdeg(d, p);
  BiPoly::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    if (d.weight(m) == top) out.emplace_hint(out.end(), m, c);
  }
  return BiPoly(std::move(out));
}

bool is_homogeneous(const Direction& d, const BiPoly& p) {
  if (p.is_zero()) return true;
  const std::int64_t w = d.weight(p.terms().begin()->first);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& kv) { return d.weight(kv.first) == w; });
}

LatticePolygon hull(const std::vector<Monomial>& input) {
  std::vector<Monomial> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto lowest = [](const Monomial& a, const Monomial& b) {
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  if (pts.size() <= 2) {
    std::sort(pts.begin(), pts.end(), lowest);
    return {pts};
  }

  auto turn = [](const Monomial& o, const Monomial& a, const Monomial& b) {
    return cross(a.i - o.i, a.j - o.j, b.i - o.i, b.j - o.j);
  };
  // Andrew's monotone chain; strict turns only, so collinear points drop out.
  std::vector<Monomial> chain(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && turn(chain[k - 2], chain[k - 1], p) <= 0) --k;
    chain[k++] = p;
  }
  for (std::size_t idx = pts.size() - 1, lower = k + 1; idx-- > 0;) {
    while (k >= lower && turn(chain[k - 2], chain[k - 1], pts[idx]) <= 0) --k;
    chain[k++] = pts[idx];
  }
  chain.resize(k - 1);
  std::rotate(chain.begin(), std::min_element(chain.begin(), chain.end(), lowest), chain.end());
  return {chain};
}

LatticePolygon hull(const BiPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  std::vector<Monomial> pts;
  pts.reserve(p.size());
  for (const auto& [m, c] : p.terms()) pts.push_back(m);
  return hull(pts);
}

std::vector<Direction> directions(const BiPoly& p) {
  const auto poly = hull(p);
  const auto& v = poly.vertices;
  std::vector<Direction> out;
  if (v.size() < 2) return out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Monomial& a = v[k];
    const Monomial& b = v[(k + 1) % v.size()];
    // Edge (ex, ey) traversed counterclockwise has outward normal (ey, -ex).
    out.push_back(Direction::primitive(b.j - a.j, -(b.i - a.i)));
  }
  return out;
}

Corners st_en(const Direction& d, const BiPoly& p) {
  const BiPoly lead = leading_form(d, p);
  auto tangent = [&d](const Monomial& m) { return -d.sigma() * m.i + d.rho() * m.j; };
  const auto& terms = lead.terms();
  auto [lo, hi] = std::minmax_element(
      terms.begin(), terms.end(),
      [&](const auto& a, const auto& b) { return tangent(a.first) < tangent(b.first); });
  return {lo->first, hi->first};
}

std::optional<Direction> succ(const BiPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (p.is_monomial()) throw MonomialInputError();
  const Direction diag(1, 1);
  std::optional<Direction> best;
  for (const auto& d : directions(p)) {
    if (d == diag) throw DirContains11Error();
    if (cross(diag, d) <= 0) continue;
    if (!best || dir_less(d, *best)) best = d;
  }
  return best;
}

}  // namespace jung
