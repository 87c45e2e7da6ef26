#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pellsurf/contfrac.hpp"

namespace pellsurf {

/// x^2 - g(u) y^2 = c over k[u]; g nonconstant.
class PellProblem {
 public:
  explicit PellProblem(Poly g);

  Field field() const noexcept { return g_.field(); }
  const Poly& g() const noexcept { return g_; }

 private:
  Poly g_;
};

/// A pair (x, y) with x^2 - g y^2 = c, c a nonzero constant. Checked on
/// construction.
class PellSolution {
 public:
  /// Throws NotASolution.
  PellSolution(Poly x, Poly y, const PellProblem& pb);

  const Poly& x() const noexcept { return x_; }
  const Poly& y() const noexcept { return y_; }
  const Scalar& norm() const noexcept { return c_; }
  bool is_trivial() const noexcept { return y_.is_zero(); }

  friend bool operator==(const PellSolution& a, const PellSolution& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  Poly x_, y_;
  Scalar c_;
};

enum class StructuralReason { OddDegree, NonSquareLeadingCoeff, ConstantTimesSquare };

enum class Classification { Candidate, OddDegree, NonSquareLeadingCoeff, ConstantTimesSquare };

const char* reason_name(StructuralReason r);
const char* classification_name(Classification c);

Classification structural_classify(const PellProblem& pb);

struct SolvabilityVerdict {
  enum class Status { Solved, StructurallyUnsolvable, UnknownWithinBound };

  Status status = Status::UnknownWithinBound;
  StructuralReason reason = StructuralReason::OddDegree;  // when structural
  /// Norm-1 fundamental solution, canonical representative.
  std::optional<PellSolution> fundamental;
  /// Lowest-degree solution of any constant norm (the first convergent hit).
  /// Its x-degree is ord(P1 - P2).
  std::optional<PellSolution> minimal;
  /// 1 when the minimal solution rescales to norm 1, else 2 (its square).
  int unit_index = 0;
  int steps_used = 0;

  bool solved() const noexcept { return status == Status::Solved; }
  int torsion_order() const { return minimal ? minimal->x().degree() : 0; }
};

/// Default continued-fraction step budget (overridable by PELLSURF_MAX_STEPS
/// in the CLI).
inline constexpr int kDefaultMaxSteps = 64;

SolvabilityVerdict solve_pell(const PellProblem& pb, int max_steps = kDefaultMaxSteps);
/// Reference solver: expands the truncated Laurent series of sqrt(g) with
/// precision doubling and tests every convergent.
SolvabilityVerdict solve_pell_series(const PellProblem& pb, int max_steps = kDefaultMaxSteps);

/// c when x^2 - g y^2 = c is a nonzero constant.
std::optional<Scalar> is_solution(const Poly& x, const Poly& y, const PellProblem& pb);

/// (x1 x2 + g y1 y2, x1 y2 + x2 y1); the product (x1 + y1 √g)(x2 + y2 √g).
PellSolution group_mul(const PellSolution& a, const PellSolution& b, const PellProblem& pb);
/// (x/c, -y/c), norm 1/c.
PellSolution group_inverse(const PellSolution& s, const PellProblem& pb);
/// Binary powering through group_mul; negative n uses the inverse.
PellSolution power(const PellSolution& s, long n, const PellProblem& pb);
/// Same value through the binomial sums for (x + y √g)^n.
PellSolution power_closed_form(const PellSolution& s, long n, const PellProblem& pb);

/// s if c = 1, else (1/c) s^2.
PellSolution normalize_to_unit_norm(const PellSolution& s, const PellProblem& pb);

/// Representative of {±s, ±conj(s)} with a pole on the canonical branch of
/// sqrt(g) and canonically positive lc(y). conj(x, y) = (x, -y).
PellSolution canonical_form(const PellSolution& s, const PellProblem& pb);

/// The norm-1 generator built from a minimal solution: s/λ when c = λ^2,
/// (1/c) s^2 otherwise; returned in canonical form with the index used.
std::pair<PellSolution, int> unit_from_minimal(const PellSolution& minimal, const PellProblem& pb);

struct TorsionResult {
  std::optional<int> order;
  SolvabilityVerdict verdict;
};

/// ord(P1 - P2) = deg x of the minimal solution, when solvable within bound.
TorsionResult torsion_order(const PellProblem& pb, int max_steps = kDefaultMaxSteps);

struct FundamentalIndex {
  long index = 0;        // k >= 1 with s = ±f^(±k)
  bool inverse = false;  // s = ±f^(-k)
  bool negated = false;  // s = -f^(±k)
};

/// Requires s nontrivial with norm 1 (PreconditionViolated otherwise).
/// nullopt when f is unknown within the bound or the degree test fails;
/// InconsistentState when the degree divides but no ±f^(±k) matches.
std::optional<FundamentalIndex> fundamental_index(const PellSolution& s, const PellProblem& pb,
                                                  int max_steps = kDefaultMaxSteps);

/// Orders of x + y √g at the two points at infinity; positive = zero.
struct DivisorAtInfinity {
  long m1 = 0;  // canonical branch P1
  long m2 = 0;  // opposite branch P2
};

DivisorAtInfinity divisor_at_infinity(const PellSolution& s, const PellProblem& pb);

/// x^2 - g^p y^2 = 1 over F_p  ->  (x2, y2) with x2^p = x, y2^p = y solving
/// x^2 - g y^2 = 1. PreconditionViolated when the input does not solve the
/// g^p equation; NotPthPowerShape when x or y is not a p-th power.
PellSolution pth_power_descent(const Poly& x, const Poly& y, const Poly& g);

struct SimpleRootsCertificate {
  bool pth_power_branch = false;  // x' vanishes identically
  int simple_root_count = 0;      // of x^2 - 1
  /// Present with exactly two simple roots: x^2 - 1 = c * r * h^2.
  struct TwoRoots {
    Poly quadratic;  // r, monic, the simple part
    Poly cofactor;   // h
    Scalar constant;
  };
  std::optional<TwoRoots> two_roots;
};

/// Requires s nontrivial with norm 1.
SimpleRootsCertificate simple_roots_certificate(const PellSolution& s, const PellProblem& pb);

}  // namespace pellsurf
