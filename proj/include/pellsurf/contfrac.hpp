#pragma once

#include <cstddef>
#include <vector>

#include "pellsurf/laurent.hpp"

namespace pellsurf {

/// One convergent p_n/q_n. The raw recurrence values are scale*(p, q); the
/// stored pair has q monic.
struct Convergent {
  Poly p;
  Poly q;
  Scalar scale;
};

struct CFExpansion {
  std::vector<Poly> quotients;
  std::vector<Convergent> convergents;
  bool terminated = false;  // some remainder became exactly zero
  int steps_done = 0;
};

/// Incremental Abel expansion: a_i = floor(phi_i), phi_{i+1} = 1/(phi_i - a_i).
class CFExpander {
 public:
  explicit CFExpander(LaurentSeries phi) : phi_(std::move(phi)) {}

  /// Next partial quotient. Throws PrecisionExhausted when the remainder is
  /// not resolved by the known coefficients. Must not be called once
  /// terminated() is true.
  Poly next();
  bool terminated() const noexcept { return terminated_; }

 private:
  LaurentSeries phi_;
  bool terminated_ = false;
};

/// Expands up to `steps` partial quotients (fewer if the expansion terminates).
CFExpansion cf_expand(const LaurentSeries& phi, int steps);

/// Expansion of sqrt(g) on the given branch, re-expanding at doubled precision
/// until `steps` quotients are resolved or the budget 4*steps*deg(g) is spent.
CFExpansion cf_expand_sqrt(const Poly& g, int steps, int branch = 1);

/// Exact expansion of sqrt(g) through (P_i + sqrt g)/Q_i; no truncation.
CFExpansion cf_expand_sqrt_exact(const Poly& g, int steps);

/// Exact expansion of num/den by polynomial division.
CFExpansion cf_expand_rational(const Poly& num, const Poly& den, int steps);

/// p_{-1}=1, q_{-1}=0, p_0=a_0, q_0=1, p_n=a_n p_{n-1}+p_{n-2}, likewise q_n.
/// Throws EmptyExpansion for an empty list.
std::vector<Convergent> convergents(const std::vector<Poly>& quotients);

/// Value of the finite continued fraction as num/den (not reduced).
std::pair<Poly, Poly> evaluate_continued_fraction(const std::vector<Poly>& quotients);

struct SubstitutionReport {
  bool matches = false;
  int steps_compared = 0;
  int branch = 1;  // branch of sqrt(g∘q) matching a_0∘q
  std::vector<Poly> base_quotients;      // quotients of sqrt(g)
  std::vector<Poly> composed_quotients;  // quotients of sqrt(g∘q), expanded independently
};

/// Checks that the quotients of sqrt(g∘q) are a_i∘q term by term.
/// Throws ConstantSubstitution for constant q.
SubstitutionReport cf_substitution_check(const Poly& g, const Poly& q, int steps);

}  // namespace pellsurf
