#include <doctest.h>

#include "pellsurf/error.hpp"
#include "pellsurf/oracle.hpp"
#include "pellsurf/pell.hpp"
#include "support.hpp"

using namespace pellsurf;
using testing::code_of;
using testing::P;
using testing::S;

namespace {

bool same_up_to_sign_and_inverse(const PellSolution& a, const PellSolution& b) {
  for (int sx : {1, -1}) {
    for (int sy : {1, -1}) {
      if (a.x() == Scalar::from_int(a.x().field(), sx) * b.x() &&
          a.y() == Scalar::from_int(a.y().field(), sy) * b.y())
        return true;
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("pell") {

TEST_CASE("structural classification") {
  CHECK(structural_classify(PellProblem(P("u^3-u"))) == Classification::OddDegree);
  CHECK(structural_classify(PellProblem(P("2u^2-1"))) == Classification::NonSquareLeadingCoeff);
  CHECK(structural_classify(PellProblem(P("u^4-2u^2+1"))) == Classification::ConstantTimesSquare);
  CHECK(structural_classify(PellProblem(P("u^2-1"))) == Classification::Candidate);
  CHECK(code_of([] { PellProblem(P("3")); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("solve_pell examples") {
  SolvabilityVerdict a = solve_pell(PellProblem(P("u^2-1")));
  REQUIRE(a.solved());
  CHECK(a.fundamental->x() == P("u"));
  CHECK(a.fundamental->y() == P("1"));

  SolvabilityVerdict b = solve_pell(PellProblem(P("u^4-1")));
  REQUIRE(b.solved());
  CHECK(b.fundamental->x() == P("u^2"));
  CHECK(b.fundamental->y() == P("1"));
  CHECK(b.torsion_order() == 2);

  PellProblem f3(P("u^2+1", "F3"));
  SolvabilityVerdict c = solve_pell(f3);
  REQUIRE(c.solved());
  PellSolution listed(P("2u^2+1", "F3"), P("2u", "F3"), f3);
  CHECK(same_up_to_sign_and_inverse(*c.fundamental, listed));
  CHECK(c.fundamental->norm().is_one());

  SolvabilityVerdict d = solve_pell(PellProblem(P("2u^2-1")));
  CHECK(d.status == SolvabilityVerdict::Status::StructurallyUnsolvable);
  CHECK(d.reason == StructuralReason::NonSquareLeadingCoeff);
}

TEST_CASE("unknown within bound and step accounting") {
  SolvabilityVerdict v = solve_pell(PellProblem(P("u^4+u+1")), 20);
  CHECK(v.status == SolvabilityVerdict::Status::UnknownWithinBound);
  CHECK(v.steps_used == 20);
  CHECK_FALSE(v.fundamental.has_value());
}

TEST_CASE("series solver and exact solver agree") {
  for (const char* g : {"u^2-1", "u^4-1", "u^4+u", "u^6-1", "4u^2+4u-3", "u^4+u+1"}) {
    PellProblem pb(P(g));
    SolvabilityVerdict a = solve_pell(pb, 12), b = solve_pell_series(pb, 12);
    CHECK(a.status == b.status);
    if (a.solved() && b.solved()) {
      CHECK(*a.fundamental == *b.fundamental);
      CHECK(*a.minimal == *b.minimal);
      CHECK(a.steps_used == b.steps_used);
    }
  }
  for (const char* g : {"u^2+1", "u^4+u+2", "u^4+2u^2+3u+1"}) {
    PellProblem pb(P(g, "F5"));
    SolvabilityVerdict a = solve_pell(pb), b = solve_pell_series(pb);
    REQUIRE(a.solved());
    REQUIRE(b.solved());
    CHECK(*a.fundamental == *b.fundamental);
  }
}

TEST_CASE("is_solution") {
  PellProblem pb(P("u^2-1"));
  CHECK(is_solution(P("u"), P("1"), pb) == S(1));
  CHECK(is_solution(P("1"), P("0"), pb) == S(1));
  CHECK_FALSE(is_solution(P("u"), P("u"), pb).has_value());
  CHECK(code_of([&] { PellSolution(P("u"), P("u"), pb); }) == ErrorCode::NotASolution);
}

TEST_CASE("group law") {
  PellProblem pb(P("u^2-1"));
  PellSolution one(P("1"), P("0"), pb), f(P("u"), P("1"), pb);
  CHECK(group_mul(one, f, pb) == f);
  PellSolution sq = group_mul(f, f, pb);
  CHECK(sq.x() == P("2u^2-1"));
  CHECK(sq.y() == P("2u"));
  PellProblem pb2(P("u^2+3"));
  PellSolution s(P("u"), P("1"), pb2);  // norm -3
  PellSolution prod = group_mul(s, PellSolution(s.x(), -s.y(), pb2), pb2);
  CHECK(prod.x() == P("-3"));
  CHECK(prod.y().is_zero());
}

TEST_CASE("powers") {
  PellProblem pb(P("u^2-1"));
  PellSolution f(P("u"), P("1"), pb);
  PellSolution f3 = power(f, 3, pb);
  CHECK(f3.x() == P("4u^3-3u"));
  CHECK(f3.y() == P("4u^2-1"));
  CHECK(power(f, 0, pb).x() == P("1"));
  CHECK(power(f, 0, pb).y().is_zero());
  PellSolution inv = power(f, -1, pb);
  CHECK(inv.x() == P("u"));
  CHECK(inv.y() == P("-1"));
}

TEST_CASE("closed form equals iterated product") {
  struct Case {
    const char* g;
    const char* x;
    const char* y;
    const char* field;
  };
  for (Case c : {Case{"u^2-1", "u", "1", "Q"}, Case{"u^2+3", "u", "1", "Q"}, Case{"u^4+u", "2u^3+1", "2u", "Q"},
                 Case{"u^2+1", "u^2+2", "u", "F3"}, Case{"u^2+2", "u^2+1", "u", "F5"}}) {
    PellProblem pb(P(c.g, c.field));
    PellSolution s(P(c.x, c.field), P(c.y, c.field), pb);
    for (long n = -6; n <= 12; ++n) CHECK(power(s, n, pb) == power_closed_form(s, n, pb));
  }
}

TEST_CASE("normalize_to_unit_norm") {
  PellProblem pb(P("u^2+1", "F3"));
  PellSolution s(P("u", "F3"), P("1", "F3"), pb);
  CHECK(s.norm() == S(-1, "F3"));
  PellSolution n = normalize_to_unit_norm(s, pb);
  CHECK(n.x() == P("u^2+2", "F3"));
  CHECK(n.y() == P("u", "F3"));
  PellProblem q(P("u^2-1"));
  PellSolution f(P("u"), P("1"), q);
  CHECK(normalize_to_unit_norm(f, q) == f);
  PellSolution one(P("1"), P("0"), q);
  CHECK(normalize_to_unit_norm(one, q) == one);
}

TEST_CASE("torsion order") {
  for (int m = 1; m <= 5; ++m) {
    PellProblem pb(Poly::monomial(S(1), static_cast<std::size_t>(2 * m)) - P("1"));
    TorsionResult t = torsion_order(pb);
    REQUIRE(t.order);
    CHECK(*t.order == m);
  }
  CHECK(torsion_order(PellProblem(P("u^2-1"))).order == 1);
  TorsionResult none = torsion_order(PellProblem(P("2u^2-1")));
  CHECK_FALSE(none.order);
  CHECK(none.verdict.status == SolvabilityVerdict::Status::StructurallyUnsolvable);
}

TEST_CASE("torsion order divides the index of norm-1 solutions") {
  // The minimal solution (u, 1) of u^2 + 1 over F3 has norm -1; ord = 1 while
  // the norm-1 generator has degree 2.
  SolvabilityVerdict v = solve_pell(PellProblem(P("u^2+1", "F3")));
  REQUIRE(v.solved());
  CHECK(v.torsion_order() == 1);
  CHECK(v.unit_index == 2);
  CHECK(v.fundamental->x().degree() == 2);
}

TEST_CASE("fundamental index") {
  PellProblem pb(P("u^4-1"));
  SolvabilityVerdict v = solve_pell(pb);
  REQUIRE(v.solved());
  const PellSolution& f = *v.fundamental;
  auto one = fundamental_index(f, pb);
  REQUIRE(one);
  CHECK(one->index == 1);
  auto six = fundamental_index(power(f, 6, pb), pb);
  REQUIRE(six);
  CHECK(six->index == 6);
  CHECK_FALSE(six->inverse);
  auto inv = fundamental_index(power(f, -4, pb), pb);
  REQUIRE(inv);
  CHECK(inv->index == 4);
  CHECK(inv->inverse);
  PellSolution neg(-f.x(), -f.y(), pb);
  auto n = fundamental_index(neg, pb);
  REQUIRE(n);
  CHECK(n->negated);
  CHECK(code_of([&] { fundamental_index(PellSolution(P("1"), P("0"), pb), pb); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("divisor at infinity") {
  PellProblem pb(P("u^2-1"));
  PellSolution f(P("u"), P("1"), pb);
  DivisorAtInfinity d = divisor_at_infinity(f, pb);
  CHECK(d.m1 == -1);
  CHECK(d.m2 == 1);
  DivisorAtInfinity t = divisor_at_infinity(PellSolution(P("1"), P("0"), pb), pb);
  CHECK(t.m1 == 0);
  CHECK(t.m2 == 0);
  for (long n = 1; n <= 6; ++n) {
    DivisorAtInfinity dn = divisor_at_infinity(power(f, n, pb), pb);
    CHECK(dn.m1 == -n);
    CHECK(dn.m2 == n);
  }
}

TEST_CASE("degree law and divisor antisymmetry on fundamentals") {
  for (const char* g : {"u^2-1", "u^4-1", "u^4+u", "u^6-1"}) {
    PellProblem pb(P(g));
    SolvabilityVerdict v = solve_pell(pb);
    REQUIRE(v.solved());
    const PellSolution& f = *v.fundamental;
    for (int n = 1; n <= 8; ++n) {
      PellSolution fn = power(f, n, pb);
      CHECK(fn.x().degree() == n * f.x().degree());
      CHECK(fn.x().degree() == fn.y().degree() + pb.g().degree() / 2);
      DivisorAtInfinity d = divisor_at_infinity(fn, pb);
      CHECK(d.m1 == -d.m2);
    }
  }
}

TEST_CASE("pth power descent") {
  Poly g = P("u^2-1", "F3");
  PellSolution d = pth_power_descent(P("u^3", "F3"), P("1", "F3"), g);
  CHECK(d.x() == P("u", "F3"));
  CHECK(d.y() == P("1", "F3"));
  PellSolution t = pth_power_descent(P("1", "F3"), P("0", "F3"), g);
  CHECK(t.x() == P("1", "F3"));
  CHECK(t.y().is_zero());
  CHECK(code_of([&] { pth_power_descent(P("u^3+1", "F3"), P("1", "F3"), g); }) == ErrorCode::PreconditionViolated);
  Poly g3 = g.pow(3);
  PellProblem pb3(g3);
  SolvabilityVerdict v = solve_pell(pb3);
  REQUIRE(v.solved());
  PellSolution sq = power(*v.fundamental, 2, pb3);
  PellSolution back = pth_power_descent(sq.x(), sq.y(), g);
  CHECK(back.x().pow(3) == sq.x());
  CHECK(back.y().pow(3) == sq.y());
  CHECK(back.norm().is_one());
}

TEST_CASE("simple roots certificate") {
  PellProblem pb(P("u^2-1"));
  SimpleRootsCertificate a = simple_roots_certificate(PellSolution(P("2u^2-1"), P("2u"), pb), pb);
  CHECK_FALSE(a.pth_power_branch);
  CHECK(a.simple_root_count == 2);
  REQUIRE(a.two_roots);
  CHECK(a.two_roots->quadratic == P("u^2-1"));
  SimpleRootsCertificate b = simple_roots_certificate(PellSolution(P("u"), P("1"), pb), pb);
  CHECK(b.simple_root_count == 2);
  PellProblem pb3(P("u^6-1", "F3"));
  SimpleRootsCertificate c = simple_roots_certificate(PellSolution(P("u^3", "F3"), P("1", "F3"), pb3), pb3);
  CHECK(c.pth_power_branch);
}

TEST_CASE("canonical form picks one of the four associates") {
  PellProblem pb(P("u^2-1"));
  PellSolution f(P("u"), P("1"), pb);
  for (int sx : {1, -1}) {
    for (int sy : {1, -1}) {
      PellSolution s(Scalar::from_int(Field::rationals(), sx) * f.x(), Scalar::from_int(Field::rationals(), sy) * f.y(),
                     pb);
      CHECK(canonical_form(s, pb) == f);
    }
  }
}

}

TEST_SUITE("oracle") {

TEST_CASE("brute force examples") {
  PellProblem a(P("u^2+1", "F3"));
  auto sa = brute_force_solve(a, 2);
  REQUIRE(sa);
  CHECK(same_up_to_sign_and_inverse(*sa, PellSolution(P("2u^2+1", "F3"), P("2u", "F3"), a)));

  PellProblem b(P("u^4+2u^2+1", "F3"));
  CHECK_FALSE(brute_force_solve(b, 4).has_value());

  PellProblem c(P("u^2-1", "F5"));
  auto sc = brute_force_solve(c, 2);
  REQUIRE(sc);
  CHECK(sc->x() == P("u", "F5"));
  CHECK(sc->y() == P("1", "F5"));

  CHECK(code_of([] { brute_force_solve(PellProblem(P("u^2-1")), 2); }) == ErrorCode::PreconditionViolated);
  CHECK(code_of([] { brute_force_solve(PellProblem(P("u^2-1", "F7")), 9); }) == ErrorCode::SearchSpaceTooLarge);
}

TEST_CASE("serial and parallel kernels agree") {
  for (const char* g : {"u^2+1", "u^2+2", "u^4+u+2", "u^4+2u^2+3u+1", "u^4+u^3+1"}) {
    PellProblem pb(P(g, "F5"));
    auto a = brute_force_solve_serial(pb, 6), b = brute_force_solve(pb, 6);
    REQUIRE(a.has_value() == b.has_value());
    if (a) CHECK(*a == *b);
  }
}

TEST_CASE("oracle matches the solver on degree-2 g") {
  for (const char* fs : {"F3", "F5"}) {
    Field f = Field::parse(fs);
    const long long p = static_cast<long long>(f.characteristic());
    for (long long b = 0; b < p; ++b) {
      for (long long c = 0; c < p; ++c) {
        Poly g = Poly::from_ints(f, {c, b, 1});
        if (multiplicity_profile(g).simple_root_count != 2) continue;
        PellProblem pb(g);
        SolvabilityVerdict v = solve_pell(pb);
        auto brute = brute_force_solve(pb, 8);
        REQUIRE(v.solved());
        REQUIRE(brute);
        CHECK(same_up_to_sign_and_inverse(*v.fundamental, *brute));
      }
    }
  }
}

}
