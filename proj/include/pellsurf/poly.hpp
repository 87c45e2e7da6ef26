#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellsurf/field.hpp"

namespace pellsurf {

/// Dense univariate polynomial over a Field; coeffs[i] multiplies u^i.
/// The highest stored coefficient is nonzero; the zero polynomial stores
/// nothing and has degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  explicit Poly(Field f = Field::rationals()) : field_(f) {}
  Poly(Field f, std::vector<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  static Poly monomial(const Scalar& c, std::size_t k);
  static Poly variable(Field f) { return monomial(Scalar::one(f), 1); }
  /// Integer coefficients in ascending order of exponent.
  static Poly from_ints(Field f, std::initializer_list<long long> ascending);

  Field field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  /// Zero beyond the degree.
  Scalar coeff(std::size_t i) const;
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  /// Throws ZeroPolynomial for the zero polynomial.
  const Scalar& leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned e) const;
  Scalar eval(const Scalar& at) const;
  /// this ∘ inner.
  Poly compose(const Poly& inner) const;
  Poly derivative() const;
  /// Divide by the leading coefficient; zero stays zero.
  Poly monic() const;

  /// Canonical text: descending degree, e.g. "2*u^2 - 1/2".
  std::string to_string(char var = 'u') const;

 private:
  Field field_;
  std::vector<Scalar> coeffs_;

  void normalize();
  void check_same(const Poly& o) const;
};

struct DivRem {
  Poly quot;
  Poly rem;
};

/// f = quot*h + rem with deg rem < deg h. Throws DivisionByZero for h = 0.
DivRem divrem(const Poly& f, const Poly& h);
/// Exact quotient; throws InvalidArgument when h does not divide f.
Poly exact_div(const Poly& f, const Poly& h);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& h);
/// Make monic and report the scalar removed: f = scale * result.
std::pair<Poly, Scalar> content_normalize(const Poly& f);
/// j-th Hasse derivative: u^n -> C(n, j) u^(n-j).
Poly hasse_derivative(const Poly& f, unsigned j);

/// s with s^2 = f and leading coefficient equal to the canonical root of lc(f).
std::optional<Poly> poly_sqrt(const Poly& f);

/// Over F_p: the polynomial r with r^p = f, when f has that shape. Over Q
/// returns nullopt unless f is constant.
std::optional<Poly> pth_root(const Poly& f);

struct MultiplicityPart {
  Poly part;  // monic, squarefree
  int multiplicity;
};

struct MultiplicityProfile {
  Scalar leading;
  std::vector<MultiplicityPart> parts;  // sorted by multiplicity
  int simple_root_count = 0;
  bool derivative_vanishes = false;  // f is a p-th power (char p only)

  /// leading * prod part^multiplicity.
  Poly reconstruct() const;
  /// Squarefree part with multiplicity m, or 1.
  Poly part_with_multiplicity(int m) const;
  /// Degree of the radical: number of distinct roots over the closure.
  int distinct_root_count() const;
};

/// Squarefree decomposition over a perfect field. Throws ZeroPolynomial.
MultiplicityProfile multiplicity_profile(const Poly& f);

}  // namespace pellsurf
