#include "pellsurf/contfrac.hpp"

#include <algorithm>

namespace pellsurf {

Poly CFExpander::next() {
  if (terminated_) throw Error(ErrorCode::InvalidArgument, "expansion already terminated");
  Poly a;
  try {
    a = integral_part(phi_);
  } catch (const Error& e) {
    throw Error(ErrorCode::PrecisionExhausted, e.what());
  }
  LaurentSeries rem = phi_ - LaurentSeries::from_poly(a);
  if (rem.is_zero()) {
    if (!rem.is_exact())
      throw Error(ErrorCode::PrecisionExhausted, "remainder vanishes to the known precision");
    terminated_ = true;
    return a;
  }
  phi_ = laurent_invert(rem);
  return a;
}

CFExpansion cf_expand(const LaurentSeries& phi, int steps) {
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be at least 1");
  CFExpansion out;
  CFExpander ex(phi);
  while (out.steps_done < steps && !ex.terminated()) {
    out.quotients.push_back(ex.next());
    ++out.steps_done;
  }
  out.terminated = ex.terminated();
  out.convergents = convergents(out.quotients);
  return out;
}

CFExpansion cf_expand_sqrt(const Poly& g, int steps, int branch) {
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be at least 1");
  std::size_t deg = static_cast<std::size_t>(std::max(g.degree(), 1));
  std::size_t cap = std::max<std::size_t>(4 * static_cast<std::size_t>(steps) * deg, 16);
  std::size_t prec = std::min(cap, 2 * deg + 8);
  while (true) {
    try {
      return cf_expand(laurent_sqrt(g, prec, branch), steps);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted || prec >= cap) throw;
      prec = std::min(cap, 2 * prec);
    }
  }
}

CFExpansion cf_expand_sqrt_exact(const Poly& g, int steps) {
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be at least 1");
  Field k = g.field();
  Poly a0 = integral_part(laurent_sqrt(g, static_cast<std::size_t>(std::max(g.degree(), 0)) / 2 + 2));
  CFExpansion out;
  Poly P(k), Q = Poly::constant(Scalar::one(k));
  while (out.steps_done < steps) {
    Poly a = divrem(P + a0, Q).quot;
    out.quotients.push_back(a);
    ++out.steps_done;
    Poly next_p = a * Q - P;
    Poly num = g - next_p * next_p;
    if (num.is_zero()) {
      out.terminated = true;
      break;
    }
    Q = exact_div(num, Q);
    P = std::move(next_p);
  }
  out.convergents = convergents(out.quotients);
  return out;
}

CFExpansion cf_expand_rational(const Poly& num, const Poly& den, int steps) {
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be at least 1");
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  CFExpansion out;
  Poly a = num, b = den;
  while (out.steps_done < steps) {
    auto [q, r] = divrem(a, b);
    out.quotients.push_back(q);
    ++out.steps_done;
    if (r.is_zero()) {
      out.terminated = true;
      break;
    }
    a = std::move(b);
    b = std::move(r);
  }
  out.convergents = convergents(out.quotients);
  return out;
}

std::vector<Convergent> convergents(const std::vector<Poly>& quotients) {
  if (quotients.empty()) throw Error(ErrorCode::EmptyExpansion, "no partial quotients");
  Field k = quotients.front().field();
  Poly p_prev = Poly::constant(Scalar::one(k)), q_prev(k);
  Poly p = quotients[0], q = Poly::constant(Scalar::one(k));
  std::vector<Convergent> out;
  out.reserve(quotients.size());
  auto push = [&] {
    auto [qm, scale] = content_normalize(q);
    out.push_back({p * scale.inverse(), qm, scale});
  };
  push();
  for (std::size_t n = 1; n < quotients.size(); ++n) {
    Poly p_next = quotients[n] * p + p_prev;
    Poly q_next = quotients[n] * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    push();
  }
  return out;
}

std::pair<Poly, Poly> evaluate_continued_fraction(const std::vector<Poly>& quotients) {
  if (quotients.empty()) throw Error(ErrorCode::EmptyExpansion, "no partial quotients");
  Field k = quotients.front().field();
  // Evaluate from the tail: value = a_n, then a_{i} + 1/value.
  Poly num = quotients.back(), den = Poly::constant(Scalar::one(k));
  for (std::size_t i = quotients.size() - 1; i-- > 0;) {
    Poly new_num = quotients[i] * num + den;
    den = std::move(num);
    num = std::move(new_num);
  }
  return {num, den};
}

SubstitutionReport cf_substitution_check(const Poly& g, const Poly& q, int steps) {
  if (q.degree() < 1) throw Error(ErrorCode::ConstantSubstitution, "substitution must be nonconstant");
  Poly composed = g.compose(q);
  SubstitutionReport rep;
  CFExpansion base = cf_expand_sqrt(g, steps);
  // Leading coefficient of sqrt(g)∘q is s0 * lc(q)^(deg g / 2).
  Scalar lead_sub = base.quotients.front().leading() * q.leading().pow(g.degree() / 2);
  Scalar canonical = *composed.leading().sqrt();
  rep.branch = canonical == lead_sub ? 1 : -1;
  CFExpansion comp = cf_expand_sqrt(composed, steps, rep.branch);
  rep.base_quotients = base.quotients;
  rep.composed_quotients = comp.quotients;
  std::size_t n = std::min(base.quotients.size(), comp.quotients.size());
  rep.steps_compared = static_cast<int>(n);
  rep.matches = base.quotients.size() == comp.quotients.size();
  for (std::size_t i = 0; i < n && rep.matches; ++i)
    rep.matches = comp.quotients[i] == base.quotients[i].compose(q);
  return rep;
}

}  // namespace pellsurf
