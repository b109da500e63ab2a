#include "jung/bipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace jung {

namespace {

void check_exponents(const Monomial& m) {
  if (m.i < 0 || m.j < 0) throw std::invalid_argument("negative exponent in monomial");
}

Integer denominator_lcm(const BiPoly& p) {
  Integer l = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

struct IntTerm {
  Monomial m;
  Integer c;
};

// Coefficients scaled by the common denominator.
std::vector<IntTerm> scaled_terms(const BiPoly& p, const Integer& scale) {
  std::vector<IntTerm> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Integer v = c.get_num() * (scale / c.get_den());
    out.push_back({m, std::move(v)});
  }
  return out;
}

BiPoly naive_mul(const BiPoly& p, const BiPoly& q) {
  BiPoly::TermMap out;
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      Rational& slot = out[Monomial{mp.i + mq.i, mp.j + mq.j}];
      slot += cp * cq;
    }
  }
  return BiPoly(std::move(out));
}

// Dense integer accumulation over the bounding box of the product; avoids a
// gcd per coefficient update.
BiPoly dense_mul(const BiPoly& p, const BiPoly& q) {
  const Integer lp = denominator_lcm(p);
  const Integer lq = denominator_lcm(q);
  const auto a = scaled_terms(p, lp);
  const auto b = scaled_terms(q, lq);
  const std::int64_t width = p.degree_in(Axis::Y) + q.degree_in(Axis::Y) + 1;
  const std::int64_t height = p.degree_in(Axis::X) + q.degree_in(Axis::X) + 1;
  std::vector<Integer> acc(static_cast<std::size_t>(width * height));
  std::vector<char> touched(acc.size(), 0);
  for (const auto& ta : a) {
    for (const auto& tb : b) {
      const auto idx = static_cast<std::size_t>((ta.m.i + tb.m.i) * width + ta.m.j + tb.m.j);
      mpz_addmul(acc[idx].get_mpz_t(), ta.c.get_mpz_t(), tb.c.get_mpz_t());
      touched[idx] = 1;
    }
  }
  const Integer den = lp * lq;
  BiPoly::TermMap out;
  for (std::size_t idx = 0; idx < acc.size(); ++idx) {
    if (!touched[idx] || acc[idx] == 0) continue;
    Rational c(acc[idx], den);
    c.canonicalize();
    const auto i = static_cast<std::int64_t>(idx) / width;
    const auto j = static_cast<std::int64_t>(idx) % width;
    out.emplace_hint(out.end(), Monomial{i, j}, std::move(c));
  }
  return BiPoly(std::move(out));
}

// x_image^k for k = 0..max_k, computed lazily.
class PowerCache {
 public:
  explicit PowerCache(const BiPoly& base) : powers_{BiPoly::constant(1), base} {}
  const BiPoly& get(std::size_t k) {
    while (powers_.size() <= k) powers_.push_back(mul(powers_.back(), powers_[1]));
    return powers_[k];
  }

 private:
  std::vector<BiPoly> powers_;
};

}  // namespace

BiPoly::BiPoly(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [m, c] : terms_) check_exponents(m);
}

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rational& c, std::int64_t i, std::int64_t j) {
  TermMap t;
  t.emplace(Monomial{i, j}, c);
  return BiPoly(std::move(t));
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational BiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t BiPoly::degree_in(Axis axis) const {
  std::int64_t best = kNegInf;
  for (const auto& [m, c] : terms_) best = std::max(best, axis == Axis::X ? m.i : m.j);
  return best;
}

bool BiPoly::only_in(Axis axis) const {
  return std::all_of(terms_.begin(), terms_.end(), [axis](const auto& kv) {
    return axis == Axis::X ? kv.first.j == 0 : kv.first.i == 0;
  });
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

BiPoly add(const BiPoly& p, const BiPoly& q) { return p + q; }

BiPoly mul(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  if (p.size() * q.size() <= 64) return naive_mul(p, q);
  const std::int64_t box = (p.degree_in(Axis::X) + q.degree_in(Axis::X) + 1) *
                           (p.degree_in(Axis::Y) + q.degree_in(Axis::Y) + 1);
  // A very sparse product in a huge box is cheaper through the map.
  if (box > 16 * static_cast<std::int64_t>(p.size() * q.size()) + 4096) return naive_mul(p, q);
  return dense_mul(p, q);
}

BiPoly pow(const BiPoly& p, unsigned exponent) {
  BiPoly result = BiPoly::constant(1);
  BiPoly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

BiPoly substitute(const BiPoly& p, const BiPoly& x_image, const BiPoly& y_image) {
  if (p.is_zero()) return {};
  const bool x_is_identity = x_image == BiPoly::x();

  // Group by y exponent: P = sum_j C_j(x) y^j.
  std::map<std::int64_t, BiPoly::TermMap, std::greater<>> by_j;
  for (const auto& [m, c] : p.terms()) by_j[m.j].emplace(Monomial{m.i, 0}, c);

  PowerCache x_powers(x_image);
  auto eval_x = [&](const BiPoly::TermMap& column) -> BiPoly {
    if (x_is_identity) return BiPoly(column);
    // Horner over descending i, jumping exponent gaps with cached powers.
    BiPoly acc;
    std::int64_t prev = -1;
    for (auto it = column.rbegin(); it != column.rend(); ++it) {
      const std::int64_t i = it->first.i;
      if (prev >= 0) acc = mul(acc, x_powers.get(static_cast<std::size_t>(prev - i)));
      acc += BiPoly::constant(it->second);
      prev = i;
    }
    if (prev > 0) acc = mul(acc, x_powers.get(static_cast<std::size_t>(prev)));
    return acc;
  };

  PowerCache y_powers(y_image);
  BiPoly acc;
  std::int64_t prev = -1;
  for (const auto& [j, column] : by_j) {
    if (prev >= 0) acc = mul(acc, y_powers.get(static_cast<std::size_t>(prev - j)));
    acc += eval_x(column);
    prev = j;
  }
  if (prev > 0) acc = mul(acc, y_powers.get(static_cast<std::size_t>(prev)));
  return acc;
}

BiPoly partial(const BiPoly& p, Axis axis) {
  BiPoly::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    const std::int64_t e = axis == Axis::X ? m.i : m.j;
    if (e == 0) continue;
    const Monomial d = axis == Axis::X ? Monomial{m.i - 1, m.j} : Monomial{m.i, m.j - 1};
    out.emplace(d, c * e);
  }
  return BiPoly(std::move(out));
}

BiPoly bracket(const BiPoly& p, const BiPoly& q) {
  return mul(partial(p, Axis::X), partial(q, Axis::Y)) -
         mul(partial(p, Axis::Y), partial(q, Axis::X));
}

std::int64_t total_degree(const BiPoly& p) {
  std::int64_t best = kNegInf;
  for (const auto& [m, c] : p.terms()) best = std::max(best, m.i + m.j);
  return best;
}

std::set<Monomial> support(const BiPoly& p) {
  std::set<Monomial> out;
  for (const auto& [m, c] : p.terms()) out.insert(m);
  return out;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    std::string mono;
    auto append_var = [&mono](char var, std::int64_t e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append_var('x', m.i);
    append_var('y', m.j);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace jung
