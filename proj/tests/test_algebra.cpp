#include <doctest.h>

#include <random>

#include "pellsurf/error.hpp"
#include "support.hpp"

using namespace pellsurf;
using testing::code_of;
using testing::P;
using testing::S;
using testing::Sq;

TEST_SUITE("algebra") {

TEST_CASE("field specs") {
  CHECK(Field::parse("Q").is_rational());
  CHECK(Field::parse("F5").characteristic() == 5);
  CHECK(Field::parse("Fp:101").characteristic() == 101);
  CHECK(code_of([] { Field::parse("F2"); }) == ErrorCode::InvalidField);
  CHECK(code_of([] { Field::parse("F9"); }) == ErrorCode::InvalidField);
  CHECK(code_of([] { Field::parse("R"); }) == ErrorCode::InvalidField);
}

TEST_CASE("rationals stay reduced") {
  Scalar a = Sq(6, -4);
  CHECK(a.rational() == mpq_class(-3, 2));
  CHECK(a.rational().get_den() > 0);
  CHECK((a * Sq(2, 3)).to_string() == "-1");
}

TEST_CASE("mixed fields are rejected") {
  CHECK(code_of([] { (void)(S(1) + S(1, "F5")); }) == ErrorCode::FieldMismatch);
  CHECK(code_of([] { (void)(P("u") * P("u", "F3")); }) == ErrorCode::FieldMismatch);
  CHECK(code_of([] { (void)S(0, "F7").inverse(); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("poly core examples") {
  CHECK(gcd(P("u^2-1"), P("u-1")) == P("u-1"));
  CHECK(P("u^3", "F3").derivative().is_zero());
  CHECK(P("u^2-1").compose(P("t^3")) == P("t^6-1"));
  CHECK(code_of([] { divrem(P("u"), Poly()); }) == ErrorCode::DivisionByZero);
  CHECK(Poly().degree() == Poly::kZeroDegree);
}

TEST_CASE("field_sqrt examples") {
  CHECK(Sq(4, 9).sqrt() == Sq(2, 3));
  CHECK(S(2, "F7").sqrt() == S(3, "F7"));
  CHECK_FALSE(S(2).sqrt().has_value());
  CHECK_FALSE(S(-1).sqrt().has_value());
}

TEST_CASE("field_sqrt matches exhaustive search on small primes") {
  for (long long p : {3, 5, 7, 11, 13}) {
    Field f = Field::prime(static_cast<std::uint64_t>(p));
    for (long long c = 0; c < p; ++c) {
      std::optional<long long> smallest;
      for (long long r = 0; r < p && !smallest; ++r) {
        if ((r * r) % p == c) smallest = r;
      }
      auto got = Scalar::from_int(f, c).sqrt();
      REQUIRE(got.has_value() == smallest.has_value());
      if (got) {
        CHECK(got->residue() == static_cast<std::uint64_t>(*smallest));
      }
    }
  }
}

TEST_CASE("field_sqrt on a large prime and of squares") {
  Field f = Field::prime(1000000007ULL);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Scalar r = Scalar::from_int(f, static_cast<long long>(rng() % 1000000007ULL));
    auto s = (r * r).sqrt();
    REQUIRE(s.has_value());
    CHECK(*s * *s == r * r);
  }
  for (long long n : {1, 4, 9, 25, 49, 1000000}) {
    auto s = S(n).sqrt();
    REQUIRE(s);
    CHECK(*s * *s == S(n));
  }
}

TEST_CASE("poly_sqrt examples") {
  CHECK(poly_sqrt(P("u^2-1").pow(2)) == P("u^2-1"));
  CHECK_FALSE(poly_sqrt(P("u^2-1")).has_value());
  CHECK(poly_sqrt(P("4u^4-4u^2+1")) == P("2u^2-1"));
}

TEST_CASE("multiplicity_profile examples") {
  auto mp = multiplicity_profile(P("4u^4 - 4u^2"));
  CHECK(mp.simple_root_count == 2);
  CHECK(mp.part_with_multiplicity(1) == P("u^2-1"));
  CHECK(mp.part_with_multiplicity(2) == P("u"));
  CHECK(mp.reconstruct() == P("4u^4 - 4u^2"));

  auto sq = multiplicity_profile(P("u^2-1"));
  CHECK(sq.simple_root_count == 2);
  CHECK(sq.parts.size() == 1);

  auto f3 = multiplicity_profile(P("u^6-1", "F3"));
  CHECK(f3.derivative_vanishes);
  CHECK(f3.reconstruct() == P("u^6-1", "F3"));
  CHECK(f3.part_with_multiplicity(3).degree() == 2);
  CHECK(code_of([] { multiplicity_profile(Poly()); }) == ErrorCode::ZeroPolynomial);
}

TEST_CASE("randomized ring laws") {
  std::mt19937_64 rng(5);
  for (const char* fs : {"Q", "F5", "F3"}) {
    Field f = Field::parse(fs);
    auto rnd = [&](int deg) {
      std::vector<Scalar> c;
      for (int i = 0; i <= deg; ++i) c.push_back(Scalar::from_int(f, static_cast<long long>(rng() % 11) - 5));
      return Poly(f, c);
    };
    for (int trial = 0; trial < 60; ++trial) {
      Poly a = rnd(static_cast<int>(rng() % 7)), b = rnd(static_cast<int>(rng() % 5));
      if (b.is_zero()) continue;
      auto [q, r] = divrem(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
      Poly g = gcd(a, b);
      if (!g.is_zero()) {
        CHECK(g.leading().is_one());
        CHECK(divrem(a, g).rem.is_zero());
        CHECK(divrem(b, g).rem.is_zero());
      }
      if (!a.is_zero()) {
        auto mp = multiplicity_profile(a);
        CHECK(mp.reconstruct() == a);
      }
      Poly c = rnd(2);
      CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
      CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
  }
}

TEST_CASE("parse and print") {
  CHECK(P("u^4 - 1") == Poly::from_ints(Field::rationals(), {-1, 0, 0, 0, 1}));
  CHECK(P("2*u^2 - 1/2").to_string() == "2*u^2 - 1/2");
  CHECK(P("u^2+1", "F3").to_string() == "u^2 + 1");
  CHECK(P("t− 1").to_string('t') == "t - 1");
  CHECK(parse_poly("t^3 + t", Field::rationals()).var == 't');
  CHECK(code_of([] { P("1/3*u", "F3"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { P("u + t"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { P("u^^2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { P("1/0"); }) == ErrorCode::ParseError);
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(99);
  for (const char* fs : {"Q", "F5", "Fp:101"}) {
    Field f = Field::parse(fs);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Scalar> c;
      int deg = static_cast<int>(rng() % 8);
      for (int i = 0; i <= deg; ++i) {
        long num = static_cast<long>(rng() % 41) - 20;
        long den = f.is_rational() ? static_cast<long>(rng() % 6) + 1 : 1;
        c.push_back(Scalar::from_mpq(f, mpq_class(num, den)));
      }
      Poly a(f, c);
      for (char var : {'u', 't', 'x'}) {
        CHECK(parse_poly(a.to_string(var), f).poly == a);
      }
    }
  }
}

TEST_CASE("hasse derivatives match Taylor coefficients") {
  Poly q = P("t^5 + 3t^2 - t + 7");
  Scalar c = S(2);
  Poly shifted = q.compose(P("t + 2"));
  for (unsigned j = 0; j <= 6; ++j) CHECK(hasse_derivative(q, j).eval(c) == shifted.coeff(j));
}

}
