#include "jung/decompose.hpp"

#include <algorithm>

namespace jung {

std::string_view reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::JacobianNotConstant: return "JacobianNotConstant";
    case RejectReason::MonomialImage: return "MonomialImage";
    case RejectReason::MixedInfinity: return "MixedInfinity";
    case RejectReason::RhoNotOne: return "RhoNotOne";
    case RejectReason::NotLinearPower: return "NotLinearPower";
    case RejectReason::PInUnivariate: return "PInUnivariate";
    case RejectReason::SecondCoordinate: return "SecondCoordinate";
  }
  return "Unknown";
}

std::size_t DecomposeTrace::flips() const {
  return static_cast<std::size_t>(std::count_if(events.begin(), events.end(), [](const auto& e) {
    return e.kind != TraceEvent::Kind::Reduce;
  }));
}

LeadClass classify_leading(const BiPoly& p) {
  if (p.is_constant()) throw ConstantInputError();
  const Direction diag(1, 1);
  const BiPoly lead = leading_form(diag, p);
  const std::int64_t a = vdeg(diag, p);
  if (lead.is_monomial()) {
    const Monomial m = lead.terms().begin()->first;
    if (m.j == 0) return AxisX{a};
    if (m.i == 0) return AxisY{a};
    return Mixed{};
  }
  // lead = mu * sum_k C(a,k) x^(a-k) (-lambda y)^k
  const Rational mu = lead.coeff(a, 0);
  if (mu == 0) return Mixed{};
  const Rational lambda = -lead.coeff(a - 1, 1) / (mu * a);
  if (lambda == 0) return Mixed{};
  const Rational neg = -lambda;
  Rational neg_pow = 1;
  for (std::int64_t k = 0; k <= a; ++k) {
    const Rational expected = mu * Rational(binomial(a, k)) * neg_pow;
    if (lead.coeff(a - k, k) != expected) return Mixed{};
    neg_pow *= neg;
  }
  return LinearPower{mu, lambda, a};
}

EdgePolynomial edge_profile(const Direction& d, const BiPoly& p) {
  if (d.rho() != 1) throw RhoNotOneError();
  if (d.sigma() < 1) throw std::invalid_argument("edge_profile needs sigma >= 1");
  const Corners corners = st_en(d, p);
  if (corners.st.j != 0) throw StNotOnAxisError();
  const BiPoly lead = leading_form(d, p);
  EdgePolynomial out;
  out.a = corners.st.i;
  out.sigma = d.sigma();
  const std::int64_t n = lead.degree_in(Axis::Y);
  out.coeffs.reserve(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k) out.coeffs.push_back(lead.coeff(out.a - out.sigma * k, k));
  return out;
}

std::optional<PerfectPower> perfect_power_test(const EdgePolynomial& p) {
  const std::int64_t n = p.degree();
  if (n < 1) throw ConstantProfileError();
  const Rational& mu = p.coeffs.back();
  if (mu == 0) return std::nullopt;
  const Rational lambda = p.coeffs[static_cast<std::size_t>(n - 1)] / (mu * n);
  if (lambda == 0) return std::nullopt;
  Rational lambda_pow = 1;  // lambda^(N-k), walking k downward
  for (std::int64_t k = n; k >= 0; --k) {
    const Rational expected = mu * Rational(binomial(n, k)) * lambda_pow;
    if (p.coeffs[static_cast<std::size_t>(k)] != expected) return std::nullopt;
    lambda_pow *= lambda;
  }
  return PerfectPower{mu, lambda, n};
}

std::variant<ReductionStep, Reject> reduction_step(const BiPoly& p) {
  const LeadClass cls = classify_leading(p);
  const auto* axis = std::get_if<AxisX>(&cls);
  if (axis == nullptr || axis->a < 2 || p.is_monomial()) {
    throw std::invalid_argument("reduction_step needs a non-monomial P with leading form c*x^a, a >= 2");
  }
  const std::optional<Direction> d = succ(p);
  if (!d || d->rho() <= 0) return Reject{RejectReason::PInUnivariate};
  if (d->rho() >= 2) return Reject{RejectReason::RhoNotOne};

  EdgePolynomial edge = edge_profile(*d, p);
  const std::optional<PerfectPower> power = perfect_power_test(edge);
  if (!power) return Reject{RejectReason::NotLinearPower};

  TameMove move = TameMove::elem_y(BiPoly::monomial(-power->lambda, d->sigma(), 0));
  BiPoly reduced = apply_move(move, p);
  if (total_degree(reduced) >= total_degree(p)) {
    throw std::logic_error("elementary reduction failed to lower the degree");
  }
  return ReductionStep{std::move(move), std::move(reduced), *d, std::move(edge), *power,
                       leading_form(*d, p)};
}

std::variant<TameWord, Reject> decompose(const AutoPair& pair, DecomposeTrace* trace) {
  const BiPoly jac = bracket(pair.p, pair.q);
  if (jac.is_zero() || !jac.is_constant()) return Reject{RejectReason::JacobianNotConstant};

  TameWord word;
  // Moves applied to the current pair, in application order; the invariant is
  // original = word o current.
  std::vector<TameMove> applied;
  BiPoly cur = pair.p;
  if (trace != nullptr) *trace = DecomposeTrace{total_degree(cur), {}};

  auto record = [&](TameMove m, TraceEvent::Kind kind, std::optional<ReductionStep> step) {
    const std::int64_t before = total_degree(cur);
    cur = step ? step->reduced : apply_move(m, cur);
    if (trace != nullptr) trace->events.push_back({kind, before, total_degree(cur), std::move(step)});
    word.push_back(move_inverse(m));
    applied.push_back(std::move(m));
  };

  while (total_degree(cur) >= 2) {
    const LeadClass cls = classify_leading(cur);
    if (std::holds_alternative<AxisY>(cls)) {
      record(TameMove::swap(), TraceEvent::Kind::Flip, std::nullopt);
    } else if (const auto* lp = std::get_if<LinearPower>(&cls)) {
      record(TameMove::linear(1, lp->lambda, 0, 1), TraceEvent::Kind::Shear, std::nullopt);
    } else if (std::holds_alternative<AxisX>(cls)) {
      if (cur.is_monomial()) return Reject{RejectReason::MonomialImage};
      auto result = reduction_step(cur);
      if (const auto* rej = std::get_if<Reject>(&result)) return *rej;
      auto& step = std::get<ReductionStep>(result);
      TameMove m = step.move;
      record(std::move(m), TraceEvent::Kind::Reduce, std::move(step));
    } else {
      return Reject{RejectReason::MixedInfinity};
    }
  }

  // cur = alpha*x + beta*y + gamma = (N o ElemX(gamma))(x)
  const Rational alpha = cur.coeff(1, 0);
  const Rational beta = cur.coeff(0, 1);
  const Rational gamma = cur.coeff(0, 0);
  if (alpha == 0 && beta == 0) return Reject{RejectReason::JacobianNotConstant};
  const TameMove normalize =
      alpha != 0 ? TameMove::linear(alpha, beta, 0, 1) : TameMove::linear(0, beta, 1, 0);
  if (normalize != TameMove::linear(1, 0, 0, 1)) {
    word.push_back(normalize);
    applied.push_back(move_inverse(normalize));
  }
  if (gamma != 0) {
    word.push_back(TameMove::elem_x(BiPoly::constant(gamma)));
    applied.push_back(TameMove::elem_x(BiPoly::constant(-gamma)));
  }

  BiPoly second = pair.q;
  for (const auto& m : applied) second = apply_move(m, second);
  // second must be lambda*y + q(x) = (Linear(1,0,0,lambda) o ElemY(q))(y)
  const Rational lambda = second.coeff(0, 1);
  BiPoly rest = second - BiPoly::monomial(lambda, 0, 1);
  if (lambda == 0 || !rest.only_in(Axis::X)) return Reject{RejectReason::SecondCoordinate};
  if (lambda != 1) word.push_back(TameMove::linear(1, 0, 0, lambda));
  if (!rest.is_zero()) word.push_back(TameMove::elem_y(std::move(rest)));
  return word;
}

std::variant<AutoPair, Reject> invert(const AutoPair& pair) {
  auto result = decompose(pair);
  if (const auto* rej = std::get_if<Reject>(&result)) return *rej;
  return word_to_pair(word_inverse(std::get<TameWord>(result)));
}

}  // namespace jung
