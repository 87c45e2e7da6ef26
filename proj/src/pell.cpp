#include "pellsurf/pell.hpp"

#include <algorithm>

namespace pellsurf {

PellProblem::PellProblem(Poly g) : g_(std::move(g)) {
  if (g_.degree() < 1) throw Error(ErrorCode::InvalidArgument, "Pell problems need a nonconstant g");
}

PellSolution::PellSolution(Poly x, Poly y, const PellProblem& pb)
    : x_(std::move(x)), y_(std::move(y)), c_(Scalar::zero(pb.field())) {
  auto c = is_solution(x_, y_, pb);
  if (!c)
    throw Error(ErrorCode::NotASolution, "(" + x_.to_string() + ", " + y_.to_string() +
                                             ") does not satisfy x^2 - g y^2 = const");
  c_ = *c;
}

const char* reason_name(StructuralReason r) {
  switch (r) {
    case StructuralReason::OddDegree: return "odd_degree";
    case StructuralReason::NonSquareLeadingCoeff: return "non_square_leading_coefficient";
    case StructuralReason::ConstantTimesSquare: return "constant_times_square";
  }
  return "unknown";
}

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::Candidate: return "candidate";
    case Classification::OddDegree: return "odd_degree";
    case Classification::NonSquareLeadingCoeff: return "non_square_leading_coefficient";
    case Classification::ConstantTimesSquare: return "constant_times_square";
  }
  return "unknown";
}

Classification structural_classify(const PellProblem& pb) {
  const Poly& g = pb.g();
  if (g.degree() % 2 != 0) return Classification::OddDegree;
  if (!g.leading().sqrt()) return Classification::NonSquareLeadingCoeff;
  if (poly_sqrt(g.monic())) return Classification::ConstantTimesSquare;
  return Classification::Candidate;
}

std::optional<Scalar> is_solution(const Poly& x, const Poly& y, const PellProblem& pb) {
  Poly n = x * x - pb.g() * y * y;
  if (n.degree() != 0) return std::nullopt;
  return n.leading();
}

namespace {

Scalar canonical_root_of_lead(const PellProblem& pb) {
  auto r = pb.g().leading().sqrt();
  if (!r) throw Error(ErrorCode::NonSquareLeadingCoeff, "leading coefficient is not a square");
  return *r;
}

// Scale so that y is monic and x + y √g has its pole on the canonical branch.
PellSolution normalize_minimal(const PellSolution& s, const PellProblem& pb) {
  Scalar inv = s.y().leading().inverse();
  Poly x = s.x() * inv, y = s.y() * inv;
  if (x.leading() != canonical_root_of_lead(pb)) x = -x;
  return PellSolution(x, y, pb);
}

}  // namespace

namespace {

std::optional<SolvabilityVerdict> structural_verdict(const PellProblem& pb) {
  SolvabilityVerdict v;
  v.status = SolvabilityVerdict::Status::StructurallyUnsolvable;
  switch (structural_classify(pb)) {
    case Classification::OddDegree:
      v.reason = StructuralReason::OddDegree;
      return v;
    case Classification::NonSquareLeadingCoeff:
      v.reason = StructuralReason::NonSquareLeadingCoeff;
      return v;
    case Classification::ConstantTimesSquare:
      v.reason = StructuralReason::ConstantTimesSquare;
      return v;
    case Classification::Candidate:
      break;
  }
  return std::nullopt;
}

SolvabilityVerdict solved_at(const Poly& p, const Poly& q, int steps, const PellProblem& pb) {
  SolvabilityVerdict v;
  v.status = SolvabilityVerdict::Status::Solved;
  v.minimal = normalize_minimal(PellSolution(p, q, pb), pb);
  auto [unit, index] = unit_from_minimal(*v.minimal, pb);
  v.fundamental = unit;
  v.unit_index = index;
  v.steps_used = steps;
  return v;
}

}  // namespace

// Quotients come from the exact recurrence on (P_n, Q_n); p_n^2 - g q_n^2 is
// ±Q_{n+1}, so a constant Q_{n+1} flags the hit. Coefficients stay much
// smaller than in the truncated-series route.
SolvabilityVerdict solve_pell(const PellProblem& pb, int max_steps) {
  if (max_steps < 1) throw Error(ErrorCode::InvalidArgument, "max_steps must be at least 1");
  if (auto v = structural_verdict(pb)) return *v;
  const Poly& g = pb.g();
  Field k = pb.field();
  Poly a0 = integral_part(laurent_sqrt(g, static_cast<std::size_t>(g.degree()) / 2 + 2));
  Poly P(k), Q = Poly::constant(Scalar::one(k));
  Poly p_prev = Poly::constant(Scalar::one(k)), q_prev(k);
  Poly p(k), q = Poly::constant(Scalar::one(k));
  for (int n = 0; n < max_steps; ++n) {
    Poly a = divrem(P + a0, Q).quot;
    if (n == 0) {
      p = a;
    } else {
      Poly p_next = a * p + p_prev, q_next = a * q + q_prev;
      p_prev = std::move(p);
      q_prev = std::move(q);
      p = std::move(p_next);
      q = std::move(q_next);
    }
    Poly next_p = a * Q - P;
    Poly num = g - next_p * next_p;
    if (num.is_zero()) break;  // g is a square; excluded structurally
    Q = exact_div(num, Q);
    P = std::move(next_p);
    if (Q.degree() == 0 && p.degree() >= 1) {
      if (!is_solution(p, q, pb)) throw Error(ErrorCode::InconsistentState, "constant Q_n without a Pell solution");
      return solved_at(p, q, n + 1, pb);
    }
  }
  SolvabilityVerdict v;
  v.status = SolvabilityVerdict::Status::UnknownWithinBound;
  v.steps_used = max_steps;
  return v;
}

SolvabilityVerdict solve_pell_series(const PellProblem& pb, int max_steps) {
  if (max_steps < 1) throw Error(ErrorCode::InvalidArgument, "max_steps must be at least 1");
  if (auto v = structural_verdict(pb)) return *v;
  SolvabilityVerdict v;
  const Poly& g = pb.g();
  Field k = pb.field();
  std::size_t deg = static_cast<std::size_t>(g.degree());
  std::size_t cap = std::max<std::size_t>(4 * static_cast<std::size_t>(max_steps) * deg, 16);
  std::size_t prec = std::min(cap, 2 * deg + 8);
  while (true) {
    try {
      CFExpander ex(laurent_sqrt(g, prec));
      Poly p_prev = Poly::constant(Scalar::one(k)), q_prev(k);
      Poly p(k), q = Poly::constant(Scalar::one(k));
      for (int n = 0; n < max_steps; ++n) {
        Poly a = ex.next();
        if (n == 0) {
          p = a;
        } else {
          Poly p_next = a * p + p_prev, q_next = a * q + q_prev;
          p_prev = std::move(p);
          q_prev = std::move(q);
          p = std::move(p_next);
          q = std::move(q_next);
        }
        if (auto c = is_solution(p, q, pb); c && p.degree() >= 1) {
          return solved_at(p, q, n + 1, pb);
        }
        if (ex.terminated()) break;
      }
      v.status = SolvabilityVerdict::Status::UnknownWithinBound;
      v.steps_used = max_steps;
      return v;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted || prec >= cap) throw;
      prec = std::min(cap, 2 * prec);
    }
  }
}

PellSolution group_mul(const PellSolution& a, const PellSolution& b, const PellProblem& pb) {
  return PellSolution(a.x() * b.x() + pb.g() * a.y() * b.y(), a.x() * b.y() + b.x() * a.y(), pb);
}

PellSolution group_inverse(const PellSolution& s, const PellProblem& pb) {
  Scalar inv = s.norm().inverse();
  return PellSolution(s.x() * inv, -(s.y() * inv), pb);
}

PellSolution power(const PellSolution& s, long n, const PellProblem& pb) {
  Field k = pb.field();
  if (n < 0) return group_inverse(power(s, -n, pb), pb);
  PellSolution result(Poly::constant(Scalar::one(k)), Poly(k), pb);
  PellSolution base = s;
  while (n) {
    if (n & 1) result = group_mul(result, base, pb);
    n >>= 1;
    if (n) base = group_mul(base, base, pb);
  }
  return result;
}

PellSolution power_closed_form(const PellSolution& s, long n, const PellProblem& pb) {
  if (n < 0) return power_closed_form(group_inverse(s, pb), -n, pb);
  Field k = pb.field();
  Poly x(k), y(k);
  Poly y2g = s.y() * s.y() * pb.g();
  Poly gy_pow = Poly::constant(Scalar::one(k));  // (y^2 g)^i
  for (long i = 0; 2 * i <= n; ++i) {
    x += s.x().pow(static_cast<unsigned>(n - 2 * i)) * gy_pow * binomial(k, n, 2 * i);
    if (2 * i + 1 <= n)
      y += s.x().pow(static_cast<unsigned>(n - 2 * i - 1)) * s.y() * gy_pow * binomial(k, n, 2 * i + 1);
    gy_pow *= y2g;
  }
  return PellSolution(x, y, pb);
}

PellSolution normalize_to_unit_norm(const PellSolution& s, const PellProblem& pb) {
  if (s.norm().is_one()) return s;
  PellSolution sq = group_mul(s, s, pb);
  Scalar inv = s.norm().inverse();
  return PellSolution(sq.x() * inv, sq.y() * inv, pb);
}

PellSolution canonical_form(const PellSolution& s, const PellProblem& pb) {
  if (s.is_trivial()) {
    if (s.x().leading().is_canonical_positive()) return s;
    return PellSolution(-s.x(), s.y(), pb);
  }
  Poly x = s.x(), y = s.y();
  if (x.leading() != y.leading() * canonical_root_of_lead(pb)) y = -y;
  if (!y.leading().is_canonical_positive()) {
    x = -x;
    y = -y;
  }
  return PellSolution(x, y, pb);
}

std::pair<PellSolution, int> unit_from_minimal(const PellSolution& minimal, const PellProblem& pb) {
  if (auto lambda = minimal.norm().sqrt()) {
    Scalar inv = lambda->inverse();
    return {canonical_form(PellSolution(minimal.x() * inv, minimal.y() * inv, pb), pb), 1};
  }
  return {canonical_form(normalize_to_unit_norm(minimal, pb), pb), 2};
}

TorsionResult torsion_order(const PellProblem& pb, int max_steps) {
  TorsionResult r{std::nullopt, solve_pell(pb, max_steps)};
  if (r.verdict.solved()) r.order = r.verdict.torsion_order();
  return r;
}

std::optional<FundamentalIndex> fundamental_index(const PellSolution& s, const PellProblem& pb,
                                                  int max_steps) {
  if (s.is_trivial() || !s.norm().is_one())
    throw Error(ErrorCode::PreconditionViolated, "fundamental index needs a nontrivial norm-1 solution");
  SolvabilityVerdict v = solve_pell(pb, max_steps);
  if (!v.solved()) return std::nullopt;
  const PellSolution& f = *v.fundamental;
  int dx = s.x().degree(), df = f.x().degree();
  if (dx % df != 0) return std::nullopt;
  long k = dx / df;
  PellSolution fk = power(f, k, pb);
  Poly x = fk.x(), y = fk.y();
  for (bool inverse : {false, true}) {
    for (bool negated : {false, true}) {
      Poly cx = negated ? -x : x;
      Poly cy = (negated != inverse) ? -y : y;
      if (s.x() == cx && s.y() == cy) return FundamentalIndex{k, inverse, negated};
    }
  }
  throw Error(ErrorCode::InconsistentState,
              "degree ratio " + std::to_string(k) + " but the solution is not ±f^(±k)");
}

DivisorAtInfinity divisor_at_infinity(const PellSolution& s, const PellProblem& pb) {
  if (s.is_trivial()) return {0, 0};
  std::size_t prec = 2 * static_cast<std::size_t>(std::max(s.x().degree(), 0)) + 4;
  LaurentSeries x = LaurentSeries::from_poly(s.x()), y = LaurentSeries::from_poly(s.y());
  LaurentSeries plus = x + y * laurent_sqrt(pb.g(), prec, 1);
  LaurentSeries minus = x + y * laurent_sqrt(pb.g(), prec, -1);
  if (plus.is_zero() || minus.is_zero())
    throw Error(ErrorCode::PrecisionExhausted, "valuation at infinity not resolved");
  DivisorAtInfinity d{-plus.top(), -minus.top()};
  if (d.m1 + d.m2 != 0)
    throw Error(ErrorCode::InconsistentState, "divisor at infinity has nonzero degree");
  return d;
}

PellSolution pth_power_descent(const Poly& x, const Poly& y, const Poly& g) {
  Field k = g.field();
  if (k.is_rational()) throw Error(ErrorCode::PreconditionViolated, "descent needs characteristic p");
  unsigned p = static_cast<unsigned>(k.characteristic());
  Poly gp = g.pow(p);
  if (x * x - gp * y * y != Poly::constant(Scalar::one(k)))
    throw Error(ErrorCode::PreconditionViolated, "input does not solve x^2 - g^p y^2 = 1");
  auto x2 = pth_root(x), y2 = pth_root(y);
  if (!x2 || !y2) throw Error(ErrorCode::NotPthPowerShape, "solution is not a p-th power");
  PellProblem pb(g);
  PellSolution out(*x2, *y2, pb);
  if (!out.norm().is_one()) throw Error(ErrorCode::NotPthPowerShape, "p-th root does not have norm 1");
  return out;
}

SimpleRootsCertificate simple_roots_certificate(const PellSolution& s, const PellProblem& pb) {
  if (s.is_trivial() || !s.norm().is_one())
    throw Error(ErrorCode::PreconditionViolated, "certificate needs a nontrivial norm-1 solution");
  Field k = pb.field();
  SimpleRootsCertificate cert;
  Poly f = s.x() * s.x() - Poly::constant(Scalar::one(k));
  MultiplicityProfile prof = multiplicity_profile(f);
  cert.simple_root_count = prof.simple_root_count;
  cert.pth_power_branch = s.x().derivative().is_zero();
  if (cert.pth_power_branch) return cert;
  if (cert.simple_root_count < 2)
    throw Error(ErrorCode::InconsistentState, "x^2 - 1 has fewer than two simple roots");
  if (cert.simple_root_count == 2) {
    Poly r = prof.part_with_multiplicity(1);
    Poly rest = exact_div(f, r * prof.leading);
    auto h = poly_sqrt(rest);
    if (!h) throw Error(ErrorCode::InconsistentState, "non-simple roots of x^2 - 1 are not all double");
    cert.two_roots = SimpleRootsCertificate::TwoRoots{r, *h, prof.leading};
  }
  return cert;
}

}  // namespace pellsurf
