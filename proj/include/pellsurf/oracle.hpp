#pragma once

#include <optional>

#include "pellsurf/pell.hpp"

namespace pellsurf {

/// Exhaustive search over F_p for the lowest-degree nontrivial solution of
/// x^2 - g y^2 = c, c in F_p^*. Candidates y are monic with deg y <= deg_bound;
/// scanning every c covers the scalar multiples. The hit is returned as the
/// canonical norm-1 generator (same normalization as solve_pell).
///
/// Throws PreconditionViolated over Q and SearchSpaceTooLarge when
/// p^(deg_bound+1) > 10^7.
std::optional<PellSolution> brute_force_solve_serial(const PellProblem& pb, int deg_bound);

/// OpenMP version: candidates of one degree are scanned in parallel and the
/// first hit in enumeration order wins, so the result equals the serial one.
std::optional<PellSolution> brute_force_solve(const PellProblem& pb, int deg_bound);

/// Lowest-degree hit before normalization (y monic); shared by both kernels.
struct OracleHit {
  PellSolution minimal;
  int degree;
};
std::optional<OracleHit> brute_force_minimal(const PellProblem& pb, int deg_bound, bool parallel);

}  // namespace pellsurf
