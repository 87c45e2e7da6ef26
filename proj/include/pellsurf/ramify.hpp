#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pellsurf/poly.hpp"

namespace pellsurf {

/// Ramification data shared by every root of `locus` (or the point at
/// infinity). Finite points are grouped by equal (e, d) through gcds with
/// Hasse derivatives, so `locus` is squarefree but not necessarily
/// irreducible.
struct RamPoint {
  bool at_infinity = false;
  Poly locus;           // monic squarefree; empty at infinity
  int point_count = 1;  // geometric points: deg locus, or 1 at infinity
  int e = 1;
  int d = 0;
  bool tame = true;
};

struct RamProfile {
  Poly map;
  std::uint64_t characteristic = 0;
  std::vector<RamPoint> finite;
  RamPoint infinity;
  int total = 0;  // sum of d over geometric points, infinity included

  int hurwitz_expected() const { return 2 * map.degree() - 2; }
  bool hurwitz_holds() const { return total == hurwitz_expected(); }
};

/// Throws InvalidArgument for constant q and Inseparable when q' = 0.
RamProfile ramification_profile(const Poly& q);

/// ord_{v=0} d(1/q(1/v))/dv, from a truncated series in v = 1/t.
int d_infinity(const Poly& q);

/// Local data at a finite point c.
int local_e(const Poly& q, const Scalar& c);
int local_d(const Poly& q, const Scalar& c);

struct CompositionReport {
  Scalar c1, c2;  // c2 = q1(c1)
  int lhs_finite = 0, rhs_finite = 0;
  int lhs_infinity = 0, rhs_infinity = 0;
  bool holds() const { return lhs_finite == rhs_finite && lhs_infinity == rhs_infinity; }
};

/// d_{c1}(q2∘q1) against d_{c2}(q2) e_{c1}(q1) + d_{c1}(q1), and the same at
/// infinity. Throws Inseparable for any inseparable input.
CompositionReport discriminant_composition_check(const Poly& q1, const Poly& q2, const Scalar& c1);

struct Pi1Report {
  bool certified = false;
  int d_infinity = 0;
  int degree = 0;
  std::uint64_t characteristic = 0;
};

/// Over F_p: certified iff d_inf < 2(1 - 1/p) deg q. Always certified in char 0.
Pi1Report pi1_criterion(const Poly& q);

struct MildReport {
  bool mild = false;
  bool separable = false;
  bool infinity_ok = false;  // d_inf = d - 1 (p ∤ d) or d (p | d)
  bool finite_ok = false;    // every finite d_b <= 1
  std::vector<std::string> reasons;
};

/// Inseparable input is reported (separable = false), not thrown.
MildReport mild_ramification_check(const Poly& q);

struct PlacesAtInfinity {
  int count = 0;
  bool rational = false;  // every place defined over the base field
};

/// v^2 = f. Throws ReducibleCurve when f is a constant times a square.
PlacesAtInfinity places_at_infinity(const Poly& f);

}  // namespace pellsurf
