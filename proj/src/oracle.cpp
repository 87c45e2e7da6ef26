#include "pellsurf/oracle.hpp"

#include <cstdint>
#include <limits>

#include <omp.h>

namespace pellsurf {

namespace {

void check_space(const PellProblem& pb, int deg_bound) {
  if (pb.field().is_rational())
    throw Error(ErrorCode::PreconditionViolated, "brute-force oracle runs over F_p only");
  if (deg_bound < 0) throw Error(ErrorCode::InvalidArgument, "degree bound must be nonnegative");
  long double space = 1;
  for (int i = 0; i <= deg_bound; ++i) space *= static_cast<long double>(pb.field().characteristic());
  if (space > 1e7L)
    throw Error(ErrorCode::SearchSpaceTooLarge, "p^(deg_bound+1) exceeds 10^7");
}

// Monic y of degree d whose lower coefficients are the base-p digits of idx.
Poly candidate(Field k, int d, std::uint64_t idx) {
  std::uint64_t p = k.characteristic();
  std::vector<Scalar> cs(static_cast<std::size_t>(d) + 1, Scalar::zero(k));
  for (int i = 0; i < d; ++i) {
    cs[static_cast<std::size_t>(i)] = Scalar::from_int(k, static_cast<long long>(idx % p));
    idx /= p;
  }
  cs[static_cast<std::size_t>(d)] = Scalar::one(k);
  return Poly(k, std::move(cs));
}

// Smallest c in [1, p) with g y^2 + c a square, or 0.
std::uint64_t first_norm(const Poly& gy2, Field k) {
  for (std::uint64_t c = 1; c < k.characteristic(); ++c) {
    Poly h = gy2 + Poly::constant(Scalar::from_int(k, static_cast<long long>(c)));
    if (poly_sqrt(h)) return c;
  }
  return 0;
}

}  // namespace

std::optional<OracleHit> brute_force_minimal(const PellProblem& pb, int deg_bound, bool parallel) {
  check_space(pb, deg_bound);
  Field k = pb.field();
  std::uint64_t p = k.characteristic();
  const Poly& g = pb.g();
  std::uint64_t count = 1;
  for (int d = 0; d <= deg_bound; ++d, count *= p) {
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t best = kNone;
    if (parallel) {
      const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
      for (long long idx = 0; idx < n; ++idx) {
        if (static_cast<std::uint64_t>(idx) > best) continue;
        Poly y = candidate(k, d, static_cast<std::uint64_t>(idx));
        if (first_norm(g * y * y, k) != 0) best = std::min(best, static_cast<std::uint64_t>(idx));
      }
    } else {
      for (std::uint64_t idx = 0; idx < count && best == kNone; ++idx) {
        Poly y = candidate(k, d, idx);
        if (first_norm(g * y * y, k) != 0) best = idx;
      }
    }
    if (best == kNone) continue;
    Poly y = candidate(k, d, best);
    Poly gy2 = g * y * y;
    std::uint64_t c = first_norm(gy2, k);
    Poly x = *poly_sqrt(gy2 + Poly::constant(Scalar::from_int(k, static_cast<long long>(c))));
    return OracleHit{PellSolution(x, y, pb), d};
  }
  return std::nullopt;
}

std::optional<PellSolution> brute_force_solve_serial(const PellProblem& pb, int deg_bound) {
  auto hit = brute_force_minimal(pb, deg_bound, false);
  if (!hit) return std::nullopt;
  return unit_from_minimal(hit->minimal, pb).first;
}

std::optional<PellSolution> brute_force_solve(const PellProblem& pb, int deg_bound) {
  auto hit = brute_force_minimal(pb, deg_bound, true);
  if (!hit) return std::nullopt;
  return unit_from_minimal(hit->minimal, pb).first;
}

}  // namespace pellsurf
