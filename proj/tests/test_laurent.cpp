#include <doctest.h>

#include <algorithm>
#include <random>

#include "pellsurf/error.hpp"
#include "pellsurf/laurent.hpp"
#include "support.hpp"

using namespace pellsurf;
using testing::code_of;
using testing::P;
using testing::S;
using testing::Sq;

TEST_SUITE("laurent") {

TEST_CASE("sqrt(u^2 - 1)") {
  LaurentSeries s = laurent_sqrt(P("u^2-1"), 7);
  CHECK(s.top() == 1);
  CHECK(s.coeff(1) == S(1));
  CHECK(s.coeff(0) == S(0));
  CHECK(s.coeff(-1) == Sq(-1, 2));
  CHECK(s.coeff(-3) == Sq(-1, 8));
  CHECK(s.coeff(-5) == Sq(-1, 16));
  CHECK(s.known_low() == -5);
  CHECK(s.to_string() == "u - 1/2*u^-1 - 1/8*u^-3 - 1/16*u^-5 + O(u^-6)");
}

TEST_CASE("sqrt of a perfect square is exact") {
  LaurentSeries s = laurent_sqrt(P("u^4"), 4);
  CHECK(s.is_exact());
  CHECK(integral_part(s) == P("u^2"));
}

TEST_CASE("sqrt errors") {
  CHECK(code_of([] { laurent_sqrt(P("2u^2-1"), 5); }) == ErrorCode::NonSquareLeadingCoeff);
  CHECK(code_of([] { laurent_sqrt(P("u^3-u"), 5); }) == ErrorCode::OddDegree);
  CHECK(code_of([] { laurent_sqrt(P("u^2-1"), 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("negative branch") {
  LaurentSeries a = laurent_sqrt(P("u^2-1"), 6, 1);
  LaurentSeries b = laurent_sqrt(P("u^2-1"), 6, -1);
  CHECK((a + b).is_zero());
}

TEST_CASE("sqrt squared agrees with g to the guaranteed precision") {
  std::mt19937_64 rng(3);
  for (const char* fs : {"Q", "F5"}) {
    Field f = Field::parse(fs);
    for (int trial = 0; trial < 40; ++trial) {
      int deg = 2 * (1 + static_cast<int>(rng() % 3));
      std::vector<Scalar> c;
      for (int i = 0; i < deg; ++i) c.push_back(Scalar::from_int(f, static_cast<long long>(rng() % 9) - 4));
      Scalar lead = Scalar::from_int(f, 1 + static_cast<long long>(rng() % 3));
      c.push_back(lead * lead);
      Poly g(f, c);
      const std::size_t prec = 12;
      LaurentSeries s = laurent_sqrt(g, prec);
      LaurentSeries sq = s * s;
      const long low = std::max(sq.known_low(), sq.top() - 40);
      for (long e = sq.top(); e >= low; --e) CHECK(sq.coeff(e) == (e >= 0 ? g.coeff(static_cast<std::size_t>(e)) : Scalar::zero(f)));
      CHECK(sq.known_low() <= deg - static_cast<long>(prec) + 1);
    }
  }
}

TEST_CASE("integral part") {
  CHECK(integral_part(laurent_sqrt(P("u^2-1"), 6)) == P("u"));
  LaurentSeries tail = LaurentSeries::from_terms(Field::rationals(), -1, {S(1), S(1)}, false);
  CHECK(integral_part(tail).is_zero());
  Poly p = P("3u^5 - u + 2");
  CHECK(integral_part(LaurentSeries::from_poly(p)) == p);
  LaurentSeries thin = LaurentSeries::from_terms(Field::rationals(), 3, {S(1), S(2)}, false);
  CHECK(code_of([&] { integral_part(thin); }) == ErrorCode::InsufficientPrecision);
}

TEST_CASE("integral part is additive") {
  LaurentSeries a = laurent_sqrt(P("u^4+u+1"), 10);
  LaurentSeries b = laurent_sqrt(P("4u^2-3"), 10);
  CHECK(integral_part(a + b) == integral_part(a) + integral_part(b));
}

TEST_CASE("inversion") {
  LaurentSeries inv = laurent_invert(LaurentSeries::from_poly(P("u")));
  CHECK(inv.top() == -1);
  CHECK(inv.coeff(-1) == S(1));
  LaurentSeries geo = LaurentSeries::from_terms(Field::rationals(), 0, {S(1), S(-1)}, true);
  LaurentSeries r = laurent_invert(geo, 6);
  for (long e = 0; e > -6; --e) CHECK(r.coeff(e) == S(1));
  CHECK(code_of([] { laurent_invert(LaurentSeries()); }) == ErrorCode::ZeroSeries);
  LaurentSeries s = laurent_sqrt(P("u^2-1"), 8);
  LaurentSeries one = s * laurent_invert(s);
  CHECK(one.top() == 0);
  for (long e = -1; e >= one.known_low(); --e) CHECK(one.coeff(e).is_zero());
}

TEST_CASE("integral part of q(t)^-j vanishes") {
  for (const char* q : {"t", "t^2+1", "2t^3-t+5"}) {
    Poly qp = P(q);
    LaurentSeries inv = laurent_invert(LaurentSeries::from_poly(qp), 12);
    LaurentSeries pw = inv;
    for (int j = 1; j <= 4; ++j) {
      CHECK(integral_part(pw).is_zero());
      pw = pw * inv;
    }
  }
}

TEST_CASE("operations fail loudly past the known precision") {
  LaurentSeries s = laurent_sqrt(P("u^2-1"), 3);
  CHECK(code_of([&] { (void)s.coeff(-10); }) == ErrorCode::InsufficientPrecision);
}

}
