#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "pellsurf/error.hpp"

namespace pellsurf {

/// Coefficient field: the rationals or a prime field F_p with p odd.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws InvalidField unless p is an odd prime.
  static Field prime(std::uint64_t p);
  /// Accepts "Q", "F<p>" and "Fp:<p>".
  static Field parse(std::string_view spec);

  bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n);

/// An element of a Field. Rationals are kept in lowest terms with positive
/// denominator, residues in [0, p).
class Scalar {
 public:
  Scalar() : Scalar(Field::rationals()) {}
  explicit Scalar(Field f);

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return from_int(f, 1); }
  static Scalar from_int(Field f, long long v);
  static Scalar from_mpz(Field f, const mpz_class& v);
  /// Throws DivisionByZero when the denominator vanishes in f.
  static Scalar from_mpq(Field f, const mpq_class& v);

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; only meaningful over Q.
  const mpq_class& rational() const;
  /// Residue in [0, p); only meaningful over F_p.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  Scalar pow(long long e) const;

  /// Square root, or nullopt for a non-square. Over Q the non-negative root;
  /// over F_p the smaller residue.
  std::optional<Scalar> sqrt() const;

  /// The sign convention used for canonical representatives: positive over Q,
  /// residue in [1, (p-1)/2] over F_p.
  bool is_canonical_positive() const;

  std::string to_string() const;

 private:
  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;

  void check_same(const Scalar& o) const;
};

/// field_sqrt as a free function.
inline std::optional<Scalar> field_sqrt(const Scalar& c) { return c.sqrt(); }

/// Binomial coefficient mapped into f.
Scalar binomial(Field f, long long n, long long k);

}  // namespace pellsurf
