#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pellsurf/poly.hpp"

namespace pellsurf {

/// Truncated element of k((u^-1)).
///
/// Coefficients are stored densely from the top exponent downwards. An exact
/// series has no error term (polynomials, Laurent polynomials); an inexact one
/// knows its coefficients for exponents top() down to known_low() and carries
/// O(u^(known_low()-1)). Operations fail with InsufficientPrecision rather than
/// guessing coefficients they cannot see.
class LaurentSeries {
 public:
  explicit LaurentSeries(Field f = Field::rationals());  // exact zero

  static LaurentSeries from_poly(const Poly& p);
  /// Descending coefficients starting at exponent `top`.
  static LaurentSeries from_terms(Field f, long top, std::vector<Scalar> descending, bool exact);

  Field field() const noexcept { return field_; }
  bool is_exact() const noexcept { return exact_; }
  /// True when every known coefficient vanishes.
  bool is_zero() const;
  /// Highest exponent with nonzero coefficient. Throws ZeroSeries when is_zero().
  long top() const;
  /// Number of stored coefficients (relative precision for inexact series).
  std::size_t precision() const noexcept { return coeffs_.size(); }
  /// Lowest exponent whose coefficient is known. Meaningless for exact series.
  long known_low() const;
  /// Coefficient of u^e; throws InsufficientPrecision below known_low().
  Scalar coeff(long e) const;

  /// Inexact copy keeping `prec` coefficients from the top.
  LaurentSeries truncated(std::size_t prec) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries operator*(const Scalar& c) const;

  /// "u - 1/2*u^-1 + O(u^-3)".
  std::string to_string(char var = 'u') const;

 private:
  Field field_;
  long top_ = 0;
  std::vector<Scalar> coeffs_;  // coeffs_[i] multiplies u^(top_ - i)
  bool exact_ = true;

  void normalize();
};

/// Square root of g in k((u^-1)) on the branch whose leading coefficient is
/// `branch` times the canonical root of lc(g). `prec` coefficients are kept;
/// perfect squares come back exact.
LaurentSeries laurent_sqrt(const Poly& g, std::size_t prec, int branch = 1);

/// Nonnegative-exponent part.
Poly integral_part(const LaurentSeries& phi);

/// Multiplicative inverse; top(result) = -top(phi). An exact input that is
/// not a monomial needs an explicit `prec`.
LaurentSeries laurent_invert(const LaurentSeries& phi, std::optional<std::size_t> prec = std::nullopt);

}  // namespace pellsurf
