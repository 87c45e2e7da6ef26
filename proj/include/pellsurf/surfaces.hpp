#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellsurf/pell.hpp"

namespace pellsurf {

enum class SpecialCase { None, Deg0, Deg1Base, ConstTimesSquare, PowerOfLinear, Deg2 };
enum class LogKodaira { MinusInfinity, Zero, One };

const char* special_case_name(SpecialCase c);
const char* log_kodaira_name(LogKodaira k);

struct SurfaceClassification {
  SpecialCase special_case = SpecialCase::None;
  LogKodaira log_kodaira = LogKodaira::One;
  bool constant_times_square = false;  // solvability attribute, reported separately
};

/// Throws ZeroPolynomial.
SurfaceClassification classify_surface(const Poly& g);

/// Roots of f lying in its own field (all of them are returned once).
/// Over Q this uses the rational root test and throws OutOfRange when the
/// extreme coefficients are too large to factor by trial division.
std::vector<Scalar> roots_in_field(const Poly& f);

/// A (possibly singular) affine line t -> (x(t), y(t), u(t)) on S_g.
struct AffineLine {
  enum class Kind { Vertical, TrivialSection, Section };

  Kind kind = Kind::TrivialSection;
  long n = 0;    // Section: exponent of the fundamental solution (negative = inverse)
  int sign = 1;  // x = sign * ... for verticals and trivial sections; overall sign for sections
  Poly x, y, u;  // parametrization; u is empty for verticals over non-rational roots
  std::string definition_field;
  std::optional<Poly> root_locus;  // verticals over roots of this factor of g
  int root_index = 0;              // which geometric root of root_locus
};

const char* line_kind_name(AffineLine::Kind k);

struct LineEnumeration {
  std::vector<AffineLine> lines;
  bool complete = false;  // every line of S_g of the listed kinds up to n_max is present
  std::string caveat;
  SolvabilityVerdict verdict;
};

/// Obvious lines plus ±f^(±n), 1 <= n <= n_max. Throws OddDegreeOutOfScope.
LineEnumeration enumerate_lines(const PellProblem& pb, int n_max, int max_steps = kDefaultMaxSteps);

/// True when the parametrization satisfies x^2 - g(u) y^2 = 1 identically
/// (for verticals over non-rational roots: the locus divides g).
bool verify_line(const AffineLine& line, const PellProblem& pb);

/// (T_n, U_{n-1}) in variable t over the given field. n >= 1.
std::pair<Poly, Poly> chebyshev_pair(int n, Field f = Field::rationals());

struct SurfacePoint {
  Scalar x, y, u;
  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

/// Sections Σ_n of S_2 at t = 1, for 1 <= n <= n_max; each is (1, n, 1).
std::vector<SurfacePoint> line_L_intersections(int n_max);

/// Multiplicative order of x_1(b) + y_1(b) w in k[w]/(w^2 - g(b)), where
/// (x_1, y_1) is the given section. Over Q: searched up to order_bound.
/// Over F_p: the exact order. Throws DegenerateFiber when g(b) = 0.
std::optional<long> is_cyclotomic_fiber(const PellProblem& pb, const PellSolution& section,
                                        const Scalar& b, long order_bound);

struct BaseChangeReport {
  enum class Status { Equal, Mismatch, Inconclusive, BothUnsolvable };
  Status status = Status::Inconclusive;
  SolvabilityVerdict base;      // x^2 - g y^2 = 1
  SolvabilityVerdict composed;  // x^2 - (g∘q) y^2 = 1
  std::optional<PellSolution> pulled_back;  // canonical form of (f_x∘q, f_y∘q)
};

const char* base_change_status_name(BaseChangeReport::Status s);

/// Solves for g and for g∘q independently and compares the fundamental of
/// the composition with the composition of the fundamental.
BaseChangeReport verify_base_change(const Poly& g, const Poly& q, int max_steps = kDefaultMaxSteps);

struct DoubleSection {
  Poly x, y, u;  // t -> (x_c(t^2 + c), t y_c(t^2 + c), t^2 + c)
  bool trivial = false;
  bool verified = false;
};

/// aux = (x_c, y_c) must solve x^2 - (u - c) g y^2 = 1 (NotASolution otherwise).
DoubleSection double_section_deg3(const Poly& g, const Scalar& c, const Poly& aux_x, const Poly& aux_y);

struct DoubleSectionScan {
  std::vector<Scalar> solvable;  // constants c with a nontrivial auxiliary solution
  std::vector<DoubleSection> sections;
};

/// Tries every c of a prime field (or the given list over Q).
DoubleSectionScan scan_double_sections(const Poly& g, const std::vector<Scalar>& constants,
                                       int max_steps = kDefaultMaxSteps);

struct SurfaceCurve {
  Poly x, y, u;
};

enum class EndoKind { PowerMap, Translation, Inverse, BaseAutoLift, ChebyshevMap };

struct Endomorphism {
  EndoKind kind = EndoKind::Inverse;
  long n = 1;                          // PowerMap, ChebyshevMap
  std::optional<PellSolution> section;  // Translation (norm 1)
  std::optional<Poly> sigma;           // BaseAutoLift: u -> a u + b with g∘sigma = r^2 g
  std::optional<Scalar> root;          // BaseAutoLift: r
};

bool on_surface(const PellProblem& pb, const SurfacePoint& pt);
bool on_surface(const PellProblem& pb, const SurfaceCurve& c);

/// ChebyshevMap is defined on S_2 only and throws IndeterminacyLocus where
/// U_{n-1}(t) vanishes.
SurfacePoint endo_apply(const Endomorphism& e, const PellProblem& pb, const SurfacePoint& pt);
SurfaceCurve endo_apply(const Endomorphism& e, const PellProblem& pb, const SurfaceCurve& c);

struct Deg2Family {
  Scalar c;
  PellSolution solution;  // norm 1 for g = t^2 - c
  Poly candidate_x, candidate_y;  // ((1/c + c) t^2 - c^2, 2t)
  bool candidate_valid = false;
};

/// Throws InvalidArgument for c = 0.
Deg2Family deg2_solution_family(const Scalar& c);

}  // namespace pellsurf
