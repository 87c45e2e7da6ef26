#include "pellsurf/surfaces.hpp"

#include <algorithm>
#include <random>

#include "pellsurf/error.hpp"

namespace pellsurf {

namespace {

template <class T>
struct Quad {
  T a, b;
};

template <class T>
Quad<T> quad_mul(const Quad<T>& z1, const Quad<T>& z2, const T& d) {
  return {z1.a * z2.a + d * (z1.b * z2.b), z1.a * z2.b + z2.a * z1.b};
}

template <class T>
Quad<T> quad_pow(Quad<T> z, unsigned long n, const T& d, const T& one, const T& zero) {
  Quad<T> acc{one, zero};
  while (n) {
    if (n & 1U) acc = quad_mul(acc, z, d);
    n >>= 1U;
    if (n) z = quad_mul(z, z, d);
  }
  return acc;
}

// z^n for a norm-1 element; negative n conjugates.
template <class T>
Quad<T> quad_pow_signed(const Quad<T>& z, long n, const T& d, const T& one, const T& zero) {
  unsigned long m = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Quad<T> r = quad_pow(z, m, d, one, zero);
  if (n < 0) r.b = -r.b;
  return r;
}

Poly radical(const Poly& f) {
  MultiplicityProfile mp = multiplicity_profile(f);
  Poly r = Poly::constant(Scalar::one(f.field()));
  for (const auto& part : mp.parts) r *= part.part;
  return r;
}

Poly powmod(Poly base, mpz_class e, const Poly& m) {
  Poly acc = Poly::constant(Scalar::one(m.field()));
  base = divrem(base, m).rem;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = divrem(acc * base, m).rem;
    e >>= 1;
    if (e > 0) base = divrem(base * base, m).rem;
  }
  return acc;
}

// h is a monic product of distinct linear factors over F_p, p odd.
void split_linear(const Poly& h, std::mt19937_64& rng, std::vector<Scalar>& out) {
  Field f = h.field();
  if (h.degree() <= 0) return;
  if (h.degree() == 1) {
    out.push_back(-h.coeff(0) / h.coeff(1));
    return;
  }
  const std::uint64_t p = f.characteristic();
  const mpz_class half = (mpz_class(static_cast<unsigned long>(p)) - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);
  for (;;) {
    Poly shift = Poly::variable(f) + Poly::constant(Scalar::from_mpz(f, mpz_class(static_cast<unsigned long>(pick(rng)))));
    Poly w = powmod(shift, half, h) - Poly::constant(Scalar::one(f));
    Poly d = gcd(h, w);
    if (d.degree() > 0 && d.degree() < h.degree()) {
      split_linear(d, rng, out);
      split_linear(exact_div(h, d), rng, out);
      return;
    }
  }
}

void divisors_of(const mpz_class& n, std::vector<mpz_class>& out) {
  static const mpz_class kLimit("100000000000000");
  if (n > kLimit) {
    throw Error(ErrorCode::OutOfRange, "rational root search: coefficient " + n.get_str() + " too large");
  }
  const unsigned long long v = n.get_ui();
  for (unsigned long long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.emplace_back(std::to_string(d));
      if (d * d != v) out.emplace_back(std::to_string(v / d));
    }
  }
}

std::vector<Scalar> rational_roots(const Poly& r) {
  Field q = r.field();
  std::vector<Scalar> roots;
  mpz_class den = 1;
  for (const auto& c : r.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : r.coeffs()) ints.emplace_back(c.rational() * den);
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) roots.push_back(Scalar::zero(q));
  if (ints.size() - low <= 1) return roots;
  mpz_class a0 = abs(ints[low]);
  mpz_class an = abs(ints.back());
  std::vector<mpz_class> num, dnm;
  divisors_of(a0, num);
  divisors_of(an, dnm);
  std::vector<mpq_class> seen;
  for (const auto& a : num) {
    for (const auto& b : dnm) {
      mpq_class cand(a, b);
      cand.canonicalize();
      for (int s : {1, -1}) {
        mpq_class v = s * cand;
        if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
        seen.push_back(v);
        Scalar x = Scalar::from_mpq(q, v);
        if (r.eval(x).is_zero()) roots.push_back(x);
      }
    }
  }
  return roots;
}

std::vector<Scalar> prime_field_roots(const Poly& r) {
  Field f = r.field();
  const std::uint64_t p = f.characteristic();
  std::vector<Scalar> roots;
  if (p <= 1000000) {
    for (std::uint64_t v = 0; v < p; ++v) {
      Scalar x = Scalar::from_mpz(f, mpz_class(static_cast<unsigned long>(v)));
      if (r.eval(x).is_zero()) roots.push_back(x);
    }
    return roots;
  }
  Poly m = r.monic();
  Poly xp = powmod(Poly::variable(f), mpz_class(static_cast<unsigned long>(p)), m);
  Poly h = gcd(m, xp - Poly::variable(f));
  std::mt19937_64 rng(0x5eed);
  split_linear(h, rng, roots);
  return roots;
}

bool is_const_times_square(const Poly& g) {
  return g.degree() >= 0 && poly_sqrt(g.monic()).has_value();
}

std::string base_field_name(Field f) { return f.name(); }

}  // namespace

const char* special_case_name(SpecialCase c) {
  switch (c) {
    case SpecialCase::None: return "None";
    case SpecialCase::Deg0: return "Deg0";
    case SpecialCase::Deg1Base: return "Deg1Base";
    case SpecialCase::ConstTimesSquare: return "ConstTimesSquare";
    case SpecialCase::PowerOfLinear: return "PowerOfLinear";
    case SpecialCase::Deg2: return "Deg2";
  }
  return "?";
}

const char* log_kodaira_name(LogKodaira k) {
  switch (k) {
    case LogKodaira::MinusInfinity: return "-inf";
    case LogKodaira::Zero: return "0";
    case LogKodaira::One: return "1";
  }
  return "?";
}

SurfaceClassification classify_surface(const Poly& g) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "classify_surface: g = 0");
  SurfaceClassification out;
  out.constant_times_square = is_const_times_square(g);
  const int d = g.degree();
  if (d == 0) {
    out.special_case = SpecialCase::Deg0;
    out.log_kodaira = LogKodaira::MinusInfinity;
  } else if (d == 1) {
    out.special_case = SpecialCase::Deg1Base;
    out.log_kodaira = LogKodaira::MinusInfinity;
  } else if (multiplicity_profile(g).distinct_root_count() == 1) {
    out.special_case = SpecialCase::PowerOfLinear;
    out.log_kodaira = LogKodaira::Zero;
  } else if (d == 2) {
    out.special_case = SpecialCase::Deg2;
    out.log_kodaira = LogKodaira::Zero;
  } else {
    out.special_case = out.constant_times_square ? SpecialCase::ConstTimesSquare : SpecialCase::None;
    out.log_kodaira = LogKodaira::One;
  }
  return out;
}

std::vector<Scalar> roots_in_field(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots_in_field: f = 0");
  if (f.degree() <= 0) return {};
  Poly r = radical(f);
  return r.field().is_rational() ? rational_roots(r) : prime_field_roots(r);
}

const char* line_kind_name(AffineLine::Kind k) {
  switch (k) {
    case AffineLine::Kind::Vertical: return "vertical";
    case AffineLine::Kind::TrivialSection: return "trivial";
    case AffineLine::Kind::Section: return "section";
  }
  return "?";
}

bool verify_line(const AffineLine& line, const PellProblem& pb) {
  const Poly& g = pb.g();
  if (line.root_locus) {
    if (!divrem(g, *line.root_locus).rem.is_zero()) return false;
    Poly one = Poly::constant(Scalar::one(g.field()));
    return line.x * line.x == one;
  }
  Poly lhs = line.x * line.x - g.compose(line.u) * line.y * line.y;
  return lhs.is_one();
}

LineEnumeration enumerate_lines(const PellProblem& pb, int n_max, int max_steps) {
  const Poly& g = pb.g();
  if (g.degree() % 2 != 0) {
    throw Error(ErrorCode::OddDegreeOutOfScope,
                "enumerate_lines: deg g = " + std::to_string(g.degree()) + " is odd");
  }
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "enumerate_lines: n_max < 0");
  Field f = pb.field();
  const Scalar one = Scalar::one(f);
  const Poly t = Poly::variable(f);
  LineEnumeration out;

  // Verticals: u = root, x = ±1, y = t.
  Poly rad = radical(g);
  Poly rest = rad;
  for (const Scalar& r : roots_in_field(rad)) {
    Poly lin = t - Poly::constant(r);
    rest = exact_div(rest, lin);
    for (int s : {1, -1}) {
      AffineLine l;
      l.kind = AffineLine::Kind::Vertical;
      l.sign = s;
      l.x = Poly::constant(s == 1 ? one : -one);
      l.y = t;
      l.u = Poly::constant(r);
      l.definition_field = base_field_name(f);
      out.lines.push_back(std::move(l));
    }
  }
  if (rest.degree() > 0) {
    Poly locus = rest.monic();
    for (int i = 0; i < locus.degree(); ++i) {
      for (int s : {1, -1}) {
        AffineLine l;
        l.kind = AffineLine::Kind::Vertical;
        l.sign = s;
        l.x = Poly::constant(s == 1 ? one : -one);
        l.y = t;
        l.root_locus = locus;
        l.root_index = i;
        l.definition_field = f.is_rational() ? "Q(alpha)" : f.name() + "(alpha)";
        out.lines.push_back(std::move(l));
      }
    }
  }

  for (int s : {1, -1}) {
    AffineLine l;
    l.kind = AffineLine::Kind::TrivialSection;
    l.sign = s;
    l.x = Poly::constant(s == 1 ? one : -one);
    l.y = Poly(f);
    l.u = t;
    l.definition_field = base_field_name(f);
    out.lines.push_back(std::move(l));
  }

  out.verdict = solve_pell(pb, max_steps);
  if (out.verdict.solved()) {
    const PellSolution& fund = *out.verdict.fundamental;
    for (int n = 1; n <= n_max; ++n) {
      PellSolution pn = power(fund, n, pb);
      for (long e : {static_cast<long>(n), -static_cast<long>(n)}) {
        for (int s : {1, -1}) {
          AffineLine l;
          l.kind = AffineLine::Kind::Section;
          l.n = e;
          l.sign = s;
          l.x = s == 1 ? pn.x() : -pn.x();
          Poly y = e > 0 ? pn.y() : -pn.y();
          l.y = s == 1 ? y : -y;
          l.u = t;
          l.definition_field = base_field_name(f);
          out.lines.push_back(std::move(l));
        }
      }
    }
    out.complete = true;
  } else if (out.verdict.status == SolvabilityVerdict::Status::StructurallyUnsolvable) {
    out.complete = true;
    out.caveat = std::string("only the obvious lines exist (") + reason_name(out.verdict.reason) + ")";
  } else {
    out.complete = false;
    out.caveat = "solvability unknown within " + std::to_string(max_steps) +
                 " steps; sections of higher degree may exist";
  }

  for (const auto& l : out.lines) {
    if (!verify_line(l, pb)) {
      throw Error(ErrorCode::InconsistentState, std::string("enumerate_lines: ") + line_kind_name(l.kind) +
                                                    " line failed its identity check");
    }
  }
  return out;
}

std::pair<Poly, Poly> chebyshev_pair(int n, Field f) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "chebyshev_pair: n must be >= 1");
  const Poly t = Poly::variable(f);
  const Poly two_t = Scalar::from_int(f, 2) * t;
  Poly t_prev = Poly::constant(Scalar::one(f));  // T_0
  Poly t_cur = t;                                // T_1
  Poly u_prev(f);                                // U_{-1}
  Poly u_cur = Poly::constant(Scalar::one(f));   // U_0
  for (int k = 1; k < n; ++k) {
    Poly t_next = two_t * t_cur - t_prev;
    Poly u_next = two_t * u_cur - u_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
    u_prev = std::move(u_cur);
    u_cur = std::move(u_next);
  }
  return {t_cur, u_cur};
}

std::vector<SurfacePoint> line_L_intersections(int n_max) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "line_L_intersections: n_max must be >= 1");
  Field q = Field::rationals();
  const Scalar one = Scalar::one(q);
  PellProblem s2(Poly::from_ints(q, {-1, 0, 1}));
  PellSolution base(Poly::variable(q), Poly::constant(one), s2);
  std::vector<SurfacePoint> pts;
  PellSolution cur = base;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) cur = group_mul(cur, base, s2);
    SurfacePoint pt{cur.x().eval(one), cur.y().eval(one), one};
    if (!(pt.x == one) || !(pt.y == Scalar::from_int(q, n))) {
      throw Error(ErrorCode::InconsistentState, "line_L_intersections: section " + std::to_string(n) +
                                                    " misses (1, n, 1)");
    }
    pts.push_back(pt);
  }
  return pts;
}

std::optional<long> is_cyclotomic_fiber(const PellProblem& pb, const PellSolution& section, const Scalar& b,
                                        long order_bound) {
  Field f = pb.field();
  const Scalar d = pb.g().eval(b);
  if (d.is_zero()) throw Error(ErrorCode::DegenerateFiber, "is_cyclotomic_fiber: g(b) = 0 at b = " + b.to_string());
  const Scalar one = Scalar::one(f);
  const Scalar zero = Scalar::zero(f);
  Quad<Scalar> z{section.x().eval(b), section.y().eval(b)};
  auto is_unit = [&](const Quad<Scalar>& w) { return w.a == one && w.b.is_zero(); };

  if (f.is_rational()) {
    Quad<Scalar> acc = z;
    for (long n = 1; n <= order_bound; ++n) {
      if (is_unit(acc)) return n;
      acc = quad_mul(acc, z, d);
    }
    return std::nullopt;
  }

  // z lies in F_p^* or F_{p^2}^*; reduce the group exponent prime by prime.
  const unsigned long p = static_cast<unsigned long>(f.characteristic());
  mpz_class exponent = d.sqrt() ? mpz_class(mpz_class(p) - 1) : mpz_class(mpz_class(p) * p - 1);
  auto zpow = [&](const mpz_class& e) {
    Quad<Scalar> acc{one, zero};
    Quad<Scalar> base = z;
    mpz_class k = e;
    while (k > 0) {
      if (mpz_odd_p(k.get_mpz_t())) acc = quad_mul(acc, base, d);
      k >>= 1;
      if (k > 0) base = quad_mul(base, base, d);
    }
    return acc;
  };
  if (!is_unit(zpow(exponent))) {
    throw Error(ErrorCode::InconsistentState, "is_cyclotomic_fiber: element is not a unit");
  }
  mpz_class rest = exponent;
  std::vector<mpz_class> primes;
  for (mpz_class q = 2; q * q <= rest; ++q) {
    if (rest % q == 0) {
      primes.push_back(q);
      while (rest % q == 0) rest /= q;
    }
  }
  if (rest > 1) primes.push_back(rest);
  mpz_class order = exponent;
  for (const auto& q : primes) {
    while (order % q == 0 && is_unit(zpow(order / q))) order /= q;
  }
  if (!order.fits_slong_p()) throw Error(ErrorCode::OutOfRange, "is_cyclotomic_fiber: order exceeds long");
  return order.get_si();
}

const char* base_change_status_name(BaseChangeReport::Status s) {
  switch (s) {
    case BaseChangeReport::Status::Equal: return "equal";
    case BaseChangeReport::Status::Mismatch: return "mismatch";
    case BaseChangeReport::Status::Inconclusive: return "inconclusive";
    case BaseChangeReport::Status::BothUnsolvable: return "both-unsolvable";
  }
  return "?";
}

BaseChangeReport verify_base_change(const Poly& g, const Poly& q, int max_steps) {
  if (q.degree() < 1) throw Error(ErrorCode::ConstantSubstitution, "verify_base_change: q is constant");
  if (g.degree() % 2 != 0) throw Error(ErrorCode::OddDegree, "verify_base_change: deg g is odd");
  PellProblem base(g);
  PellProblem composed(g.compose(q));
  BaseChangeReport rep;
  rep.base = solve_pell(base, max_steps);
  rep.composed = solve_pell(composed, max_steps);
  using S = SolvabilityVerdict::Status;
  if (rep.base.status == S::UnknownWithinBound || rep.composed.status == S::UnknownWithinBound) {
    rep.status = BaseChangeReport::Status::Inconclusive;
    return rep;
  }
  if (rep.base.status == S::StructurallyUnsolvable && rep.composed.status == S::StructurallyUnsolvable) {
    rep.status = BaseChangeReport::Status::BothUnsolvable;
    return rep;
  }
  if (!rep.base.solved() || !rep.composed.solved()) {
    rep.status = BaseChangeReport::Status::Mismatch;
    return rep;
  }
  const PellSolution& f = *rep.base.fundamental;
  PellSolution pulled(f.x().compose(q), f.y().compose(q), composed);
  rep.pulled_back = canonical_form(pulled, composed);
  rep.status = *rep.pulled_back == *rep.composed.fundamental ? BaseChangeReport::Status::Equal
                                                             : BaseChangeReport::Status::Mismatch;
  return rep;
}

DoubleSection double_section_deg3(const Poly& g, const Scalar& c, const Poly& aux_x, const Poly& aux_y) {
  if (g.degree() != 3) throw Error(ErrorCode::InvalidArgument, "double_section_deg3: g must be cubic");
  Field f = g.field();
  const Poly t = Poly::variable(f);
  Poly h = (t - Poly::constant(c)) * g;
  PellProblem aux_pb(h);
  auto norm = is_solution(aux_x, aux_y, aux_pb);
  if (!norm || !norm->is_one()) {
    throw Error(ErrorCode::NotASolution, "double_section_deg3: aux does not solve x^2 - (u - c) g y^2 = 1");
  }
  DoubleSection ds;
  ds.u = t * t + Poly::constant(c);
  ds.x = aux_x.compose(ds.u);
  ds.y = t * aux_y.compose(ds.u);
  ds.trivial = aux_y.is_zero();
  ds.verified = (ds.x * ds.x - g.compose(ds.u) * ds.y * ds.y).is_one();
  if (!ds.verified) throw Error(ErrorCode::InconsistentState, "double_section_deg3: substitution identity failed");
  return ds;
}

DoubleSectionScan scan_double_sections(const Poly& g, const std::vector<Scalar>& constants, int max_steps) {
  if (g.degree() != 3) throw Error(ErrorCode::InvalidArgument, "scan_double_sections: g must be cubic");
  Field f = g.field();
  std::vector<Scalar> cs = constants;
  if (cs.empty()) {
    if (f.is_rational()) throw Error(ErrorCode::InvalidArgument, "scan_double_sections: constants required over Q");
    if (f.characteristic() > 100000) throw Error(ErrorCode::SearchSpaceTooLarge, "scan_double_sections: field too large");
    for (std::uint64_t v = 0; v < f.characteristic(); ++v) {
      cs.push_back(Scalar::from_mpz(f, mpz_class(static_cast<unsigned long>(v))));
    }
  }
  DoubleSectionScan out;
  const Poly t = Poly::variable(f);
  for (const Scalar& c : cs) {
    PellProblem aux((t - Poly::constant(c)) * g);
    SolvabilityVerdict v = solve_pell(aux, max_steps);
    if (!v.solved()) continue;
    out.solvable.push_back(c);
    out.sections.push_back(double_section_deg3(g, c, v.fundamental->x(), v.fundamental->y()));
  }
  return out;
}

bool on_surface(const PellProblem& pb, const SurfacePoint& pt) {
  return (pt.x * pt.x - pb.g().eval(pt.u) * pt.y * pt.y).is_one();
}

bool on_surface(const PellProblem& pb, const SurfaceCurve& c) {
  return (c.x * c.x - pb.g().compose(c.u) * c.y * c.y).is_one();
}

namespace {

bool is_s2(const Poly& g) { return g == Poly::from_ints(g.field(), {-1, 0, 1}); }

void check_lift(const Endomorphism& e, const PellProblem& pb) {
  if (!e.sigma || !e.root || e.sigma->degree() != 1) {
    throw Error(ErrorCode::InvalidArgument, "endo_apply: BaseAutoLift needs a degree-1 sigma and a root r");
  }
  if (!(pb.g().compose(*e.sigma) == (*e.root * *e.root) * pb.g())) {
    throw Error(ErrorCode::PreconditionViolated, "endo_apply: g(sigma(u)) != r^2 g(u)");
  }
}

const PellSolution& translation_section(const Endomorphism& e) {
  if (!e.section || !e.section->norm().is_one()) {
    throw Error(ErrorCode::InvalidArgument, "endo_apply: translation needs a norm-1 section");
  }
  return *e.section;
}

}  // namespace

SurfacePoint endo_apply(const Endomorphism& e, const PellProblem& pb, const SurfacePoint& pt) {
  if (!on_surface(pb, pt)) throw Error(ErrorCode::PreconditionViolated, "endo_apply: point not on S_g");
  Field f = pb.field();
  const Scalar gu = pb.g().eval(pt.u);
  SurfacePoint out = pt;
  switch (e.kind) {
    case EndoKind::Inverse:
      out.y = -pt.y;
      break;
    case EndoKind::PowerMap: {
      auto z = quad_pow_signed(Quad<Scalar>{pt.x, pt.y}, e.n, gu, Scalar::one(f), Scalar::zero(f));
      out.x = z.a;
      out.y = z.b;
      break;
    }
    case EndoKind::Translation: {
      const PellSolution& s = translation_section(e);
      Scalar sx = s.x().eval(pt.u), sy = s.y().eval(pt.u);
      out.x = sx * pt.x + gu * sy * pt.y;
      out.y = sx * pt.y + sy * pt.x;
      break;
    }
    case EndoKind::BaseAutoLift:
      check_lift(e, pb);
      out.y = pt.y / *e.root;
      out.u = e.sigma->eval(pt.u);
      break;
    case EndoKind::ChebyshevMap: {
      if (!is_s2(pb.g())) throw Error(ErrorCode::InvalidArgument, "endo_apply: the Chebyshev map is defined on S_2");
      auto [tn, un] = chebyshev_pair(static_cast<int>(e.n), f);
      Scalar den = un.eval(pt.u);
      if (den.is_zero()) {
        throw Error(ErrorCode::IndeterminacyLocus, "endo_apply: U_{n-1}(t) = 0 at t = " + pt.u.to_string());
      }
      out.y = pt.y / den;
      out.u = tn.eval(pt.u);
      break;
    }
  }
  if (!on_surface(pb, out)) throw Error(ErrorCode::InconsistentState, "endo_apply: image left the surface");
  return out;
}

SurfaceCurve endo_apply(const Endomorphism& e, const PellProblem& pb, const SurfaceCurve& c) {
  if (!on_surface(pb, c)) throw Error(ErrorCode::PreconditionViolated, "endo_apply: curve not on S_g");
  Field f = pb.field();
  const Poly gu = pb.g().compose(c.u);
  SurfaceCurve out = c;
  switch (e.kind) {
    case EndoKind::Inverse:
      out.y = -c.y;
      break;
    case EndoKind::PowerMap: {
      auto z = quad_pow_signed(Quad<Poly>{c.x, c.y}, e.n, gu, Poly::constant(Scalar::one(f)), Poly(f));
      out.x = z.a;
      out.y = z.b;
      break;
    }
    case EndoKind::Translation: {
      const PellSolution& s = translation_section(e);
      Poly sx = s.x().compose(c.u), sy = s.y().compose(c.u);
      out.x = sx * c.x + gu * sy * c.y;
      out.y = sx * c.y + sy * c.x;
      break;
    }
    case EndoKind::BaseAutoLift:
      check_lift(e, pb);
      out.y = c.y * e.root->inverse();
      out.u = e.sigma->compose(c.u);
      break;
    case EndoKind::ChebyshevMap: {
      if (!is_s2(pb.g())) throw Error(ErrorCode::InvalidArgument, "endo_apply: the Chebyshev map is defined on S_2");
      auto [tn, un] = chebyshev_pair(static_cast<int>(e.n), f);
      Poly den = un.compose(c.u);
      DivRem qr = divrem(c.y, den);
      if (den.is_zero() || !qr.rem.is_zero()) {
        throw Error(ErrorCode::IndeterminacyLocus, "endo_apply: curve meets U_{n-1}(t) = 0");
      }
      out.y = qr.quot;
      out.u = tn.compose(c.u);
      break;
    }
  }
  if (!on_surface(pb, out)) throw Error(ErrorCode::InconsistentState, "endo_apply: image left the surface");
  return out;
}

Deg2Family deg2_solution_family(const Scalar& c) {
  if (c.is_zero()) throw Error(ErrorCode::InvalidArgument, "deg2_solution_family: c = 0 makes g a square");
  Field f = c.field();
  const Poly t = Poly::variable(f);
  PellProblem pb(t * t - Poly::constant(c));
  // (1/c) (t + sqrt(g))^2, built for every c so the family is uniform in c
  const Scalar ci = c.inverse();
  Poly x = ci * (Scalar::from_int(f, 2) * (t * t) - Poly::constant(c));
  Poly y = ci * (Scalar::from_int(f, 2) * t);
  Deg2Family out{c, PellSolution(x, y, pb), Poly(f), Poly(f), false};
  out.candidate_x = (c.inverse() + c) * (t * t) - Poly::constant(c * c);
  out.candidate_y = Scalar::from_int(f, 2) * t;
  auto norm = is_solution(out.candidate_x, out.candidate_y, pb);
  out.candidate_valid = norm && norm->is_one();
  return out;
}

}  // namespace pellsurf
