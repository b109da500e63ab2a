#include "jung/tame.hpp"

#include <algorithm>

namespace jung {

TameMove TameMove::elem_y(BiPoly p) {
  if (!p.only_in(Axis::X)) throw std::invalid_argument("ElemY polynomial must not involve y");
  return TameMove(ElemY{std::move(p)});
}

TameMove TameMove::elem_x(BiPoly q) {
  if (!q.only_in(Axis::Y)) throw std::invalid_argument("ElemX polynomial must not involve x");
  return TameMove(ElemX{std::move(q)});
}

TameMove TameMove::linear(Rational a, Rational b, Rational c, Rational d) {
  Linear l{std::move(a), std::move(b), std::move(c), std::move(d)};
  if (l.det() == 0) throw SingularLinearError();
  return TameMove(std::move(l));
}

BiPoly TameMove::image_x() const {
  return std::visit(
      [](const auto& m) -> BiPoly {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ElemY>) {
          return BiPoly::x();
        } else if constexpr (std::is_same_v<T, ElemX>) {
          return BiPoly::x() + m.q;
        } else {
          return BiPoly::monomial(m.a, 1, 0) + BiPoly::monomial(m.b, 0, 1);
        }
      },
      value_);
}

BiPoly TameMove::image_y() const {
  return std::visit(
      [](const auto& m) -> BiPoly {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ElemY>) {
          return BiPoly::y() + m.p;
        } else if constexpr (std::is_same_v<T, ElemX>) {
          return BiPoly::y();
        } else {
          return BiPoly::monomial(m.c, 1, 0) + BiPoly::monomial(m.d, 0, 1);
        }
      },
      value_);
}

BiPoly apply_move(const TameMove& m, const BiPoly& p) {
  return substitute(p, m.image_x(), m.image_y());
}

AutoPair word_to_pair(const TameWord& w) {
  if (w.empty()) return identity_pair();
  AutoPair acc{w.back().image_x(), w.back().image_y()};
  for (auto it = std::next(w.rbegin()); it != w.rend(); ++it) {
    const BiPoly gx = it->image_x();
    const BiPoly gy = it->image_y();
    acc = {substitute(acc.p, gx, gy), substitute(acc.q, gx, gy)};
  }
  return acc;
}

AutoPair compose_pairs(const AutoPair& f, const AutoPair& g) {
  return {substitute(g.p, f.p, f.q), substitute(g.q, f.p, f.q)};
}

TameMove move_inverse(const TameMove& m) {
  return std::visit(
      [](const auto& v) -> TameMove {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ElemY>) {
          return TameMove::elem_y(-v.p);
        } else if constexpr (std::is_same_v<T, ElemX>) {
          return TameMove::elem_x(-v.q);
        } else {
          const Rational det = v.det();
          if (det == 0) throw SingularLinearError();
          return TameMove::linear(v.d / det, -v.b / det, -v.c / det, v.a / det);
        }
      },
      m.value());
}

TameWord word_inverse(const TameWord& w) {
  TameWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(move_inverse(*it));
  return out;
}

bool verify(const TameWord& w, const AutoPair& pair) { return word_to_pair(w) == pair; }

}  // namespace jung
