#include "pellsurf/ramify.hpp"

#include "pellsurf/error.hpp"
#include "pellsurf/laurent.hpp"

namespace pellsurf {

namespace {

void require_separable(const Poly& q, const char* who) {
  if (q.degree() < 1) throw Error(ErrorCode::InvalidArgument, std::string(who) + ": q is constant");
  if (q.derivative().is_zero()) {
    auto root = pth_root(q);
    std::string witness = root ? " = (" + root->to_string('t') + ")^" + std::to_string(q.field().characteristic())
                               : "";
    throw Error(ErrorCode::Inseparable, std::string(who) + ": q' = 0, q" + witness);
  }
}

// Lowest exponent with a nonzero coefficient in f(t + c); f nonzero.
int order_at(const Poly& f, const Scalar& c) {
  Poly shifted = f.compose(Poly::variable(f.field()) + Poly::constant(c));
  int k = 0;
  while (shifted.coeff(static_cast<std::size_t>(k)).is_zero()) ++k;
  return k;
}

bool divides(std::uint64_t p, long n) { return p != 0 && n % static_cast<long>(p) == 0; }

}  // namespace

int d_infinity(const Poly& q) {
  if (q.degree() < 1) throw Error(ErrorCode::InvalidArgument, "d_infinity: q is constant");
  Field f = q.field();
  const long d = q.degree();
  const std::size_t prec = static_cast<std::size_t>(2 * d + 2);
  LaurentSeries w = laurent_invert(LaurentSeries::from_poly(q), prec);
  // w = sum_k w_k v^k with v = 1/t, so dw/dv = sum_k k w_k v^(k-1).
  for (long k = d; k < d + static_cast<long>(prec); ++k) {
    Scalar wk = w.coeff(-k);
    if (!(Scalar::from_int(f, k) * wk).is_zero()) return static_cast<int>(k - 1);
  }
  throw Error(ErrorCode::PrecisionExhausted, "d_infinity: derivative vanishes to the computed precision");
}

int local_e(const Poly& q, const Scalar& c) {
  if (q.degree() < 1) throw Error(ErrorCode::InvalidArgument, "local_e: q is constant");
  return order_at(q - Poly::constant(q.eval(c)), c);
}

int local_d(const Poly& q, const Scalar& c) {
  require_separable(q, "local_d");
  return order_at(q.derivative(), c);
}

RamProfile ramification_profile(const Poly& q) {
  require_separable(q, "ramification_profile");
  Field f = q.field();
  const std::uint64_t p = f.characteristic();
  RamProfile out;
  out.map = q;
  out.characteristic = p;

  Poly dq = q.derivative();
  if (dq.degree() > 0) {
    for (const auto& part : multiplicity_profile(dq).parts) {
      Poly rest = part.part;
      for (unsigned j = 2; rest.degree() > 0; ++j) {
        Poly vanish = gcd(rest, hasse_derivative(q, j));
        if (vanish.is_zero()) vanish = rest;
        Poly exact_here = exact_div(rest, vanish);
        if (exact_here.degree() > 0) {
          RamPoint pt;
          pt.locus = exact_here.monic();
          pt.point_count = exact_here.degree();
          pt.e = static_cast<int>(j);
          pt.d = part.multiplicity;
          pt.tame = !divides(p, pt.e);
          out.total += pt.d * pt.point_count;
          out.finite.push_back(std::move(pt));
        }
        rest = vanish;
      }
    }
  }

  out.infinity.at_infinity = true;
  out.infinity.locus = Poly(f);
  out.infinity.e = q.degree();
  out.infinity.d = d_infinity(q);
  out.infinity.tame = !divides(p, out.infinity.e);
  out.total += out.infinity.d;
  return out;
}

CompositionReport discriminant_composition_check(const Poly& q1, const Poly& q2, const Scalar& c1) {
  require_separable(q1, "discriminant_composition_check");
  require_separable(q2, "discriminant_composition_check");
  Poly comp = q2.compose(q1);
  require_separable(comp, "discriminant_composition_check");
  CompositionReport rep;
  rep.c1 = c1;
  rep.c2 = q1.eval(c1);
  rep.lhs_finite = local_d(comp, c1);
  rep.rhs_finite = local_d(q2, rep.c2) * local_e(q1, c1) + local_d(q1, c1);
  rep.lhs_infinity = d_infinity(comp);
  rep.rhs_infinity = d_infinity(q2) * q1.degree() + d_infinity(q1);
  return rep;
}

Pi1Report pi1_criterion(const Poly& q) {
  require_separable(q, "pi1_criterion");
  Pi1Report rep;
  rep.characteristic = q.field().characteristic();
  rep.degree = q.degree();
  rep.d_infinity = d_infinity(q);
  if (rep.characteristic == 0) {
    rep.certified = true;
  } else {
    // d_inf < 2 (1 - 1/p) deg  <=>  p d_inf < 2 (p - 1) deg
    const unsigned long long p = rep.characteristic;
    rep.certified = p * static_cast<unsigned long long>(rep.d_infinity) <
                    2ULL * (p - 1) * static_cast<unsigned long long>(rep.degree);
  }
  return rep;
}

MildReport mild_ramification_check(const Poly& q) {
  if (q.degree() < 1) throw Error(ErrorCode::InvalidArgument, "mild_ramification_check: q is constant");
  MildReport rep;
  if (q.derivative().is_zero()) {
    rep.reasons.push_back("inseparable: q' = 0");
    return rep;
  }
  rep.separable = true;
  RamProfile prof = ramification_profile(q);
  const int d = q.degree();
  const bool wild_degree = divides(prof.characteristic, d);
  const int want = wild_degree ? d : d - 1;
  rep.infinity_ok = prof.infinity.d == want;
  if (!rep.infinity_ok) {
    rep.reasons.push_back("d_inf = " + std::to_string(prof.infinity.d) + ", expected " + std::to_string(want) +
                          (wild_degree ? " (p | deg q)" : " (p does not divide deg q)"));
  }
  rep.finite_ok = true;
  for (const auto& pt : prof.finite) {
    if (pt.d > 1) {
      rep.finite_ok = false;
      rep.reasons.push_back("d = " + std::to_string(pt.d) + " at the roots of " + pt.locus.to_string('t'));
    }
  }
  rep.mild = rep.infinity_ok && rep.finite_ok;
  return rep;
}

PlacesAtInfinity places_at_infinity(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "places_at_infinity: f = 0");
  if (f.is_constant() || poly_sqrt(f.monic())) {
    throw Error(ErrorCode::ReducibleCurve, "places_at_infinity: f is a constant times a square");
  }
  PlacesAtInfinity out;
  if (f.degree() % 2 != 0) {
    out.count = 1;
    out.rational = true;
  } else {
    out.count = 2;
    out.rational = f.leading().sqrt().has_value();
  }
  return out;
}

}  // namespace pellsurf
