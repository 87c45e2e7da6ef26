#include "pellsurf/field.hpp"

#include <algorithm>
#include <charconv>

namespace pellsurf {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidField: return "invalid_field";
    case ErrorCode::FieldMismatch: return "field_mismatch";
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::ZeroPolynomial: return "zero_polynomial";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::OddDegree: return "odd_degree";
    case ErrorCode::NonSquareLeadingCoeff: return "non_square_leading_coefficient";
    case ErrorCode::InsufficientPrecision: return "insufficient_precision";
    case ErrorCode::PrecisionExhausted: return "precision_exhausted";
    case ErrorCode::ZeroSeries: return "zero_series";
    case ErrorCode::EmptyExpansion: return "empty_expansion";
    case ErrorCode::ConstantSubstitution: return "constant_substitution";
    case ErrorCode::NotASolution: return "not_a_solution";
    case ErrorCode::PreconditionViolated: return "precondition_violated";
    case ErrorCode::NotPthPowerShape: return "not_pth_power_shape";
    case ErrorCode::SearchSpaceTooLarge: return "search_space_too_large";
    case ErrorCode::InconsistentState: return "inconsistent_state";
    case ErrorCode::OddDegreeOutOfScope: return "odd_degree_out_of_scope";
    case ErrorCode::DegenerateFiber: return "degenerate_fiber";
    case ErrorCode::IndeterminacyLocus: return "indeterminacy_locus";
    case ErrorCode::Inseparable: return "inseparable";
    case ErrorCode::ReducibleCurve: return "reducible_curve";
    case ErrorCode::OutOfRange: return "out_of_range";
  }
  return "unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

u64 reduce(const mpz_class& v, u64 p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::optional<u64> sqrt_mod(u64 a, u64 p) {
  if (a == 0) return 0;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p < 10000) {
    for (u64 r = 1; r <= p / 2; ++r)
      if (mulmod(r, r, p) == a) return r;
    return std::nullopt;  // unreachable for a residue
  }
  // Tonelli-Shanks.
  u64 q = p - 1, s = 0;
  while ((q & 1) == 0) { q >>= 1; ++s; }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
    u64 b = c;
    for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1, s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (u64 r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(u64 p) {
  if (p == 2) throw Error(ErrorCode::InvalidField, "characteristic 2 is not supported");
  if (!is_prime_u64(p)) throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  // Products are formed in 128 bits, sums must not overflow 64.
  if (p >= (u64{1} << 62)) throw Error(ErrorCode::InvalidField, "prime too large");
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "Q") return rationals();
  std::string_view digits;
  if (spec.starts_with("Fp:")) digits = spec.substr(3);
  else if (spec.starts_with("F")) digits = spec.substr(1);
  else throw Error(ErrorCode::InvalidField, "unknown field spec '" + std::string(spec) + "'");
  u64 p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw Error(ErrorCode::InvalidField, "unknown field spec '" + std::string(spec) + "'");
  return prime(p);
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(Field f) : field_(f) {
  if (f.is_rational()) value_ = mpq_class(0);
  else value_ = u64{0};
}

Scalar Scalar::from_int(Field f, long long v) {
  Scalar s(f);
  if (f.is_rational()) {
    s.value_ = mpq_class(mpz_class(static_cast<long>(v)));
  } else {
    long long p = static_cast<long long>(f.characteristic());
    long long r = v % p;
    if (r < 0) r += p;
    s.value_ = static_cast<u64>(r);
  }
  return s;
}

Scalar Scalar::from_mpz(Field f, const mpz_class& v) {
  Scalar s(f);
  if (f.is_rational()) s.value_ = mpq_class(v);
  else s.value_ = reduce(v, f.characteristic());
  return s;
}

Scalar Scalar::from_mpq(Field f, const mpq_class& v) {
  if (f.is_rational()) {
    Scalar s(f);
    mpq_class q = v;
    q.canonicalize();
    s.value_ = q;
    return s;
  }
  Scalar num = from_mpz(f, v.get_num());
  Scalar den = from_mpz(f, v.get_den());
  if (den.is_zero())
    throw Error(ErrorCode::DivisionByZero,
                "denominator of " + v.get_str() + " vanishes in " + f.name());
  return num / den;
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<u64>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<u64>(value_) == 1;
}

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(value_); }
u64 Scalar::residue() const { return std::get<u64>(value_); }

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw Error(ErrorCode::FieldMismatch,
                "operands live in " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.is_rational()) {
    r.value_ = mpq_class(-std::get<mpq_class>(value_));
  } else {
    u64 v = std::get<u64>(value_);
    r.value_ = v == 0 ? u64{0} : field_.characteristic() - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    u64 p = field_.characteristic();
    u64 v = std::get<u64>(value_) + std::get<u64>(o.value_);
    std::get<u64>(value_) = v >= p ? v - p : v;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    u64 p = field_.characteristic();
    u64 a = std::get<u64>(value_), b = std::get<u64>(o.value_);
    std::get<u64>(value_) = a >= b ? a - b : a + (p - b);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    std::get<u64>(value_) =
        mulmod(std::get<u64>(value_), std::get<u64>(o.value_), field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  if (a.field_.is_rational()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::get<u64>(a.value_) == std::get<u64>(b.value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar r(field_);
  if (field_.is_rational()) {
    mpq_class q = 1 / std::get<mpq_class>(value_);
    r.value_ = q;
  } else {
    u64 p = field_.characteristic();
    r.value_ = powmod(std::get<u64>(value_), p - 2, p);
  }
  return r;
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = one(field_), base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::optional<Scalar> Scalar::sqrt() const {
  if (field_.is_rational()) {
    const mpq_class& q = std::get<mpq_class>(value_);
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
      return std::nullopt;
    mpz_class n = ::sqrt(mpz_class(q.get_num())), d = ::sqrt(mpz_class(q.get_den()));
    Scalar r(field_);
    r.value_ = mpq_class(n, d);
    return r;
  }
  auto r = sqrt_mod(std::get<u64>(value_), field_.characteristic());
  if (!r) return std::nullopt;
  Scalar s(field_);
  s.value_ = *r;
  return s;
}

bool Scalar::is_canonical_positive() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) > 0;
  u64 v = std::get<u64>(value_);
  return v != 0 && v <= (field_.characteristic() - 1) / 2;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<u64>(value_));
}

Scalar binomial(Field f, long long n, long long k) {
  if (k < 0 || k > n) return Scalar::zero(f);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar::from_mpz(f, b);
}

}  // namespace pellsurf
