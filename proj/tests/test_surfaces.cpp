#include <doctest.h>

#include <algorithm>

#include "pellsurf/error.hpp"
#include "pellsurf/surfaces.hpp"
#include "support.hpp"

using namespace pellsurf;
using testing::code_of;
using testing::P;
using testing::S;
using testing::Sq;

TEST_SUITE("surfaces") {

TEST_CASE("classification table") {
  CHECK(classify_surface(P("3")).log_kodaira == LogKodaira::MinusInfinity);
  CHECK(classify_surface(P("3")).special_case == SpecialCase::Deg0);
  CHECK(classify_surface(P("2u+1")).special_case == SpecialCase::Deg1Base);
  CHECK(classify_surface(P("2u+1")).log_kodaira == LogKodaira::MinusInfinity);
  CHECK(classify_surface(P("u^2-1")).special_case == SpecialCase::Deg2);
  CHECK(classify_surface(P("u^2-1")).log_kodaira == LogKodaira::Zero);
  CHECK(classify_surface(P("u^5")).special_case == SpecialCase::PowerOfLinear);
  CHECK(classify_surface(P("u^5")).log_kodaira == LogKodaira::Zero);
  CHECK(classify_surface(P("3u^2-6u+3")).special_case == SpecialCase::PowerOfLinear);
  SurfaceClassification sq = classify_surface(P("u^4-2u^2+1"));
  CHECK(sq.special_case == SpecialCase::ConstTimesSquare);
  CHECK(sq.constant_times_square);
  CHECK(sq.log_kodaira == LogKodaira::One);
  CHECK(classify_surface(P("u^4-1")).log_kodaira == LogKodaira::One);
  CHECK(classify_surface(P("u^3-u")).log_kodaira == LogKodaira::One);
  CHECK(classify_surface(P("u^6+u+1", "F5")).special_case == SpecialCase::None);
  CHECK(code_of([] { classify_surface(Poly()); }) == ErrorCode::ZeroPolynomial);
}

TEST_CASE("roots in the base field") {
  auto r = roots_in_field(P("u^3-u"));
  CHECK(r.size() == 3);
  auto half = roots_in_field(P("4u^2-1"));
  CHECK(half.size() == 2);
  CHECK(std::find(half.begin(), half.end(), Sq(1, 2)) != half.end());
  CHECK(roots_in_field(P("u^2+1")).empty());
  CHECK(roots_in_field(P("u^2+1", "F5")).size() == 2);
  Field big = Field::prime(1000003ULL);
  Poly f = Poly::from_ints(big, {-6, 11, -6, 1});  // (u-1)(u-2)(u-3)
  auto rb = roots_in_field(f);
  CHECK(rb.size() == 3);
  for (const auto& x : rb) CHECK(f.eval(x).is_zero());
}

TEST_CASE("lines on S_2") {
  PellProblem s2(P("u^2-1"));
  LineEnumeration le = enumerate_lines(s2, 2);
  CHECK(le.complete);
  long verticals = std::count_if(le.lines.begin(), le.lines.end(),
                                 [](const AffineLine& l) { return l.kind == AffineLine::Kind::Vertical; });
  long trivial = std::count_if(le.lines.begin(), le.lines.end(),
                               [](const AffineLine& l) { return l.kind == AffineLine::Kind::TrivialSection; });
  long sections = std::count_if(le.lines.begin(), le.lines.end(),
                                [](const AffineLine& l) { return l.kind == AffineLine::Kind::Section; });
  CHECK(verticals == 4);
  CHECK(trivial == 2);
  CHECK(sections == 8);
  for (const auto& l : le.lines) CHECK(verify_line(l, s2));
  auto has = [&](const char* x, const char* y) {
    return std::any_of(le.lines.begin(), le.lines.end(), [&](const AffineLine& l) {
      return l.kind == AffineLine::Kind::Section && l.x == P(x) && l.y == P(y);
    });
  };
  CHECK(has("t", "1"));
  CHECK(has("-t", "-1"));
  CHECK(has("2t^2-1", "2t"));
  CHECK(has("-2t^2+1", "-2t"));
}

TEST_CASE("lines: constant times a square has only the obvious ones") {
  PellProblem pb(P("u^4-2u^2+1"));
  LineEnumeration le = enumerate_lines(pb, 3);
  CHECK(le.verdict.status == SolvabilityVerdict::Status::StructurallyUnsolvable);
  CHECK(le.lines.size() == 6);
  CHECK(le.complete);
}

TEST_CASE("lines: odd degree is out of scope") {
  CHECK(code_of([] { enumerate_lines(PellProblem(P("u^3-u")), 2); }) == ErrorCode::OddDegreeOutOfScope);
}

TEST_CASE("lines: unknown verdict carries a caveat") {
  LineEnumeration le = enumerate_lines(PellProblem(P("u^4+u+1")), 2, 8);
  CHECK_FALSE(le.complete);
  CHECK_FALSE(le.caveat.empty());
  // u^4 + u + 1 has no rational root: four geometric verticals over Q(alpha), two signs each
  long alg = std::count_if(le.lines.begin(), le.lines.end(),
                           [](const AffineLine& l) { return l.definition_field == "Q(alpha)"; });
  CHECK(alg == 8);
  CHECK(le.lines.size() == 10);
}

TEST_CASE("line counts stay within 2 deg g + 2 obvious lines") {
  for (const char* g : {"u^2-1", "u^4-1", "u^4-5u^2+4", "u^2+1"}) {
    PellProblem pb(P(g));
    LineEnumeration le = enumerate_lines(pb, 0);
    CHECK(static_cast<int>(le.lines.size()) <= 2 * pb.g().degree() + 2);
  }
}

TEST_CASE("chebyshev pairs") {
  auto [t1, u0] = chebyshev_pair(1);
  CHECK(t1 == P("t"));
  CHECK(u0 == P("1"));
  auto [t2, u1] = chebyshev_pair(2);
  CHECK(t2 == P("2t^2-1"));
  CHECK(u1 == P("2t"));
  auto [t3, u2] = chebyshev_pair(3);
  CHECK(t3 == P("4t^3-3t"));
  CHECK(u2 == P("4t^2-1"));
  CHECK(code_of([] { chebyshev_pair(0); }) == ErrorCode::InvalidArgument);

  PellProblem s2(P("t^2-1"));
  PellSolution base(P("t"), P("1"), s2);
  for (int n = 1; n <= 50; ++n) {
    auto [tn, un] = chebyshev_pair(n);
    PellSolution pn = power(base, n, s2);
    CHECK(pn.x() == tn);
    CHECK(pn.y() == un);
    CHECK((tn * tn - s2.g() * un * un).is_one());
  }
}

TEST_CASE("line L intersections") {
  auto pts = line_L_intersections(5);
  REQUIRE(pts.size() == 5);
  CHECK(pts[0] == SurfacePoint{S(1), S(1), S(1)});
  CHECK(pts[4] == SurfacePoint{S(1), S(5), S(1)});
  PellProblem s2(P("u^2-1"));
  PellSolution f(P("u"), P("1"), s2);
  for (int n = 1; n <= 5; ++n) {
    PellSolution pn = power(f, n, s2);
    CHECK(-pn.x().eval(S(1)) == S(-1));
    CHECK(-pn.y().eval(S(1)) == S(-n));
  }
}

TEST_CASE("cyclotomic fibers on S_2") {
  PellProblem s2(P("u^2-1"));
  PellSolution f(P("u"), P("1"), s2);
  CHECK(is_cyclotomic_fiber(s2, f, S(0), 100) == 4);
  CHECK(is_cyclotomic_fiber(s2, f, Sq(-1, 2), 100) == 3);
  CHECK(is_cyclotomic_fiber(s2, f, Sq(1, 2), 100) == 6);
  CHECK_FALSE(is_cyclotomic_fiber(s2, f, S(2), 1000).has_value());
  CHECK(code_of([&] { is_cyclotomic_fiber(s2, f, S(1), 10); }) == ErrorCode::DegenerateFiber);

  PellProblem s5(P("u^2-1", "F5"));
  PellSolution f5(P("u", "F5"), P("1", "F5"), s5);
  for (long long b : {0, 2, 3}) {
    auto ord = is_cyclotomic_fiber(s5, f5, S(b, "F5"), 0);
    REQUIRE(ord);
    CHECK(24 % *ord == 0);
    // order by enumeration in the quadratic algebra
    Scalar d = s5.g().eval(S(b, "F5"));
    Scalar x = S(b, "F5"), y = S(1, "F5"), ax = x, ay = y;
    long n = 1;
    while (!(ax.is_one() && ay.is_zero())) {
      Scalar nx = ax * x + d * ay * y, ny = ax * y + ay * x;
      ax = nx;
      ay = ny;
      ++n;
    }
    CHECK(*ord == n);
  }
}

TEST_CASE("base change") {
  for (const char* q : {"t^2", "t^3", "t^2+1", "2t^3-t"}) {
    BaseChangeReport r = verify_base_change(P("u^2-1"), P(q));
    CHECK(r.status == BaseChangeReport::Status::Equal);
  }
  BaseChangeReport sq = verify_base_change(P("u^2-1"), P("t^2"));
  REQUIRE(sq.composed.solved());
  CHECK(sq.composed.fundamental->x() == P("t^2"));
  CHECK(sq.composed.fundamental->y() == P("1"));
  BaseChangeReport cube = verify_base_change(P("u^2-1"), P("t^3"));
  CHECK(cube.composed.fundamental->x() == P("t^3"));
  CHECK(verify_base_change(P("u^4+u+1"), P("t^2"), 6).status == BaseChangeReport::Status::Inconclusive);
  CHECK(verify_base_change(P("2u^2-1"), P("t^2")).status == BaseChangeReport::Status::BothUnsolvable);
  CHECK(code_of([] { verify_base_change(P("u^2-1"), P("5")); }) == ErrorCode::ConstantSubstitution);
  CHECK(code_of([] { verify_base_change(P("u^3-1"), P("t")); }) == ErrorCode::OddDegree);
}

TEST_CASE("double sections for cubic g") {
  Poly g = P("u^3-u", "F5");
  DoubleSectionScan scan = scan_double_sections(g, {});
  REQUIRE_FALSE(scan.sections.empty());
  for (const auto& d : scan.sections) CHECK(d.verified);
  DoubleSection triv = double_section_deg3(g, S(0, "F5"), P("1", "F5"), P("0", "F5"));
  CHECK(triv.trivial);
  CHECK(triv.verified);
  CHECK(code_of([&] { double_section_deg3(g, S(0, "F5"), P("u", "F5"), P("1", "F5")); }) ==
        ErrorCode::NotASolution);
  CHECK(code_of([] { double_section_deg3(P("u^2-1"), S(0), P("1"), P("0")); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("endomorphisms on points") {
  PellProblem s2(P("u^2-1"));
  SurfacePoint pt{S(2), S(1), S(2)};  // 4 - 3 = 1
  REQUIRE(on_surface(s2, pt));
  SurfacePoint inv = endo_apply(Endomorphism{EndoKind::Inverse}, s2, pt);
  CHECK(inv == SurfacePoint{S(2), S(-1), S(2)});
  Endomorphism sq{EndoKind::PowerMap, 2};
  SurfacePoint p2 = endo_apply(sq, s2, SurfacePoint{S(3), S(1), S(3)});
  CHECK(p2 == SurfacePoint{S(17), S(6), S(3)});
  Endomorphism tr{EndoKind::Translation};
  tr.section = PellSolution(P("u"), P("1"), s2);
  SurfacePoint moved = endo_apply(tr, s2, pt);
  CHECK(on_surface(s2, moved));
  CHECK(moved == SurfacePoint{S(7), S(4), S(2)});

  Endomorphism lift{EndoKind::BaseAutoLift};
  lift.sigma = P("-u");
  lift.root = S(1);
  CHECK(endo_apply(lift, s2, pt) == SurfacePoint{S(2), S(1), S(-2)});

  Endomorphism phi2{EndoKind::ChebyshevMap, 2};
  SurfacePoint img = endo_apply(phi2, s2, pt);
  CHECK(img == SurfacePoint{S(2), Sq(1, 4), S(7)});
  SurfacePoint bad{S(1), S(0), S(0)};
  CHECK(code_of([&] { endo_apply(phi2, s2, bad); }) == ErrorCode::IndeterminacyLocus);
}

TEST_CASE("endomorphisms on curves") {
  PellProblem s2(P("u^2-1"));
  SurfaceCurve sigma1{P("t"), P("1"), P("t")};
  SurfaceCurve sigma2 = endo_apply(Endomorphism{EndoKind::PowerMap, 2}, s2, sigma1);
  CHECK(sigma2.x == P("2t^2-1"));
  CHECK(sigma2.y == P("2t"));
  CHECK(sigma2.u == P("t"));
  SurfaceCurve back = endo_apply(Endomorphism{EndoKind::PowerMap, -2}, s2, sigma2);
  auto [t4, u3] = chebyshev_pair(4);
  CHECK(back.x == t4);
  CHECK(back.y == -u3);
  Endomorphism phi3{EndoKind::ChebyshevMap, 3};
  SurfaceCurve img = endo_apply(phi3, s2, SurfaceCurve{P("4t^3 - 3t"), P("4t^2-1"), P("t")});
  CHECK(on_surface(s2, img));
  CHECK(code_of([&] { endo_apply(phi3, s2, sigma1); }) == ErrorCode::IndeterminacyLocus);
  auto [t2, u1] = chebyshev_pair(2);
  CHECK(t2 * t2 - P("1") == P("t^2-1") * u1 * u1);
}

TEST_CASE("degree-2 family") {
  Deg2Family one = deg2_solution_family(S(1));
  CHECK(one.solution.x() == P("2t^2-1"));
  CHECK(one.solution.y() == P("2t"));
  CHECK(one.candidate_valid);
  Deg2Family four = deg2_solution_family(S(4));
  CHECK(four.solution.x() == P("1/2*t^2 - 1"));
  CHECK(four.solution.y() == P("1/2*t"));
  CHECK(four.solution.norm().is_one());
  CHECK_FALSE(four.candidate_valid);
  CHECK(code_of([] { deg2_solution_family(S(0)); }) == ErrorCode::InvalidArgument);
}

}
