#include "pellsurf/laurent.hpp"

#include <algorithm>
#include <limits>

namespace pellsurf {

LaurentSeries::LaurentSeries(Field f) : field_(f) {}

LaurentSeries LaurentSeries::from_poly(const Poly& p) {
  LaurentSeries s(p.field());
  if (p.is_zero()) return s;
  s.top_ = p.degree();
  s.coeffs_.assign(p.coeffs().rbegin(), p.coeffs().rend());
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::from_terms(Field f, long top, std::vector<Scalar> descending, bool exact) {
  if (!exact && descending.empty())
    throw Error(ErrorCode::InsufficientPrecision, "inexact series needs at least one coefficient");
  LaurentSeries s(f);
  s.top_ = top;
  s.coeffs_ = std::move(descending);
  s.exact_ = exact;
  s.normalize();
  return s;
}

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (exact_) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) { top_ = 0; return; }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    top_ -= static_cast<long>(lead);
    return;
  }
  if (lead == coeffs_.size()) {
    // Zero to the known precision: keep one zero at the lowest known exponent.
    long low = top_ - static_cast<long>(coeffs_.size()) + 1;
    coeffs_.assign(1, Scalar::zero(field_));
    top_ = low;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  top_ -= static_cast<long>(lead);
}

bool LaurentSeries::is_zero() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_[0].is_zero());
}

long LaurentSeries::top() const {
  if (is_zero()) throw Error(ErrorCode::ZeroSeries, "top exponent of a zero series");
  return top_;
}

long LaurentSeries::known_low() const {
  if (exact_) return std::numeric_limits<long>::min();
  return top_ - static_cast<long>(coeffs_.size()) + 1;
}

Scalar LaurentSeries::coeff(long e) const {
  if (!exact_ && e < known_low())
    throw Error(ErrorCode::InsufficientPrecision,
                "coefficient of u^" + std::to_string(e) + " is beyond the known precision");
  if (coeffs_.empty() || e > top_) return Scalar::zero(field_);
  long idx = top_ - e;
  if (idx >= static_cast<long>(coeffs_.size())) return Scalar::zero(field_);
  return coeffs_[static_cast<std::size_t>(idx)];
}

LaurentSeries LaurentSeries::truncated(std::size_t prec) const {
  if (prec == 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  LaurentSeries s(field_);
  s.exact_ = false;
  if (coeffs_.empty()) {
    s.top_ = -static_cast<long>(prec) + 1;
    s.coeffs_.assign(prec, Scalar::zero(field_));
  } else {
    s.top_ = top_;
    s.coeffs_.assign(prec, Scalar::zero(field_));
    for (std::size_t i = 0; i < std::min(prec, coeffs_.size()); ++i) s.coeffs_[i] = coeffs_[i];
    if (!exact_ && prec > coeffs_.size()) s.coeffs_.resize(coeffs_.size());
  }
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries LaurentSeries::operator*(const Scalar& c) const {
  LaurentSeries r = *this;
  for (auto& x : r.coeffs_) x *= c;
  r.normalize();
  return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "series over different fields");
  Field k = a.field_;
  bool exact = a.exact_ && b.exact_;
  long low;
  if (exact) {
    long la = a.coeffs_.empty() ? std::numeric_limits<long>::max()
                                : a.top_ - static_cast<long>(a.coeffs_.size()) + 1;
    long lb = b.coeffs_.empty() ? std::numeric_limits<long>::max()
                                : b.top_ - static_cast<long>(b.coeffs_.size()) + 1;
    low = std::min(la, lb);
    if (low == std::numeric_limits<long>::max()) return LaurentSeries(k);
  } else {
    low = std::max(a.known_low(), b.known_low());
  }
  long top = low;
  if (!a.coeffs_.empty()) top = std::max(top, a.top_);
  if (!b.coeffs_.empty()) top = std::max(top, b.top_);
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(top - low + 1));
  for (long e = top; e >= low; --e) out.push_back(a.coeff(e) + b.coeff(e));
  LaurentSeries r(k);
  r.top_ = top;
  r.coeffs_ = std::move(out);
  r.exact_ = exact;
  r.normalize();
  return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "series over different fields");
  Field k = a.field_;
  if ((a.exact_ && a.coeffs_.empty()) || (b.exact_ && b.coeffs_.empty())) return LaurentSeries(k);
  LaurentSeries r(k);
  r.exact_ = a.exact_ && b.exact_;
  if (a.is_zero() || b.is_zero()) {
    // O(u^(la-1)) * b with b's top tb is O(u^(la-1+tb)).
    const LaurentSeries& z = a.is_zero() ? a : b;
    const LaurentSeries& o = a.is_zero() ? b : a;
    r.top_ = z.top_ + o.top_;
    r.coeffs_.assign(1, Scalar::zero(k));
    return r;
  }
  r.top_ = a.top_ + b.top_;
  std::size_t n;
  if (r.exact_) n = a.coeffs_.size() + b.coeffs_.size() - 1;
  else if (a.exact_) n = b.coeffs_.size();
  else if (b.exact_) n = a.coeffs_.size();
  else n = std::min(a.coeffs_.size(), b.coeffs_.size());
  r.coeffs_.assign(n, Scalar::zero(k));
  for (std::size_t i = 0; i < std::min(n, a.coeffs_.size()); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.normalize();
  return r;
}

std::string LaurentSeries::to_string(char var) const {
  auto mono = [&](long e) {
    if (e == 0) return std::string();
    if (e == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(e);
  };
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    long e = top_ - static_cast<long>(i);
    bool negative = field_.is_rational() && sgn(c.rational()) < 0;
    Scalar mag = negative ? -c : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (e == 0) out += mag.to_string();
    else if (mag.is_one()) out += mono(e);
    else out += mag.to_string() + "*" + mono(e);
  }
  if (!exact_) {
    long err = known_low() - 1;
    out += (first ? "" : " + ") + std::string("O(") + std::string(1, var) +
           (err == 0 ? "^0" : "^" + std::to_string(err)) + ")";
  } else if (first) {
    out = "0";
  }
  return out;
}

LaurentSeries laurent_sqrt(const Poly& g, std::size_t prec, int branch) {
  Field k = g.field();
  if (prec < 1) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  if (g.is_zero()) return LaurentSeries(k);
  if (g.degree() % 2 != 0)
    throw Error(ErrorCode::OddDegree, "square root needs an even-degree polynomial");
  auto root = g.leading().sqrt();
  if (!root)
    throw Error(ErrorCode::NonSquareLeadingCoeff,
                "leading coefficient " + g.leading().to_string() + " is not a square in " + k.name());
  Scalar sign = Scalar::from_int(k, branch < 0 ? -1 : 1);
  if (auto exact = poly_sqrt(g)) return LaurentSeries::from_poly(*exact * sign);

  long m = g.degree() / 2;
  std::size_t d = static_cast<std::size_t>(g.degree());
  // f[i] multiplies u^(2m - i); s[i] multiplies u^(m - i).
  std::vector<Scalar> s(prec, Scalar::zero(k));
  s[0] = *root;
  Scalar inv2r = (Scalar::from_int(k, 2) * *root).inverse();
  for (std::size_t i = 1; i < prec; ++i) {
    Scalar acc = i <= d ? g.coeff(d - i) : Scalar::zero(k);
    for (std::size_t j = 1; j < i; ++j) {
      if (s[j].is_zero()) continue;
      acc -= s[j] * s[i - j];
    }
    s[i] = acc * inv2r;
  }
  for (auto& c : s) c *= sign;
  return LaurentSeries::from_terms(k, m, std::move(s), false);
}

Poly integral_part(const LaurentSeries& phi) {
  Field k = phi.field();
  if (phi.is_zero()) {
    if (!phi.is_exact() && phi.known_low() > 0)
      throw Error(ErrorCode::InsufficientPrecision, "integral part of an unresolved zero series");
    return Poly(k);
  }
  long top = phi.top();
  if (top < 0) return Poly(k);
  if (!phi.is_exact() && phi.known_low() > 0)
    throw Error(ErrorCode::InsufficientPrecision,
                "integral part needs coefficients down to u^0, known only to u^" +
                    std::to_string(phi.known_low()));
  std::vector<Scalar> asc(static_cast<std::size_t>(top) + 1, Scalar::zero(k));
  for (long e = 0; e <= top; ++e) asc[static_cast<std::size_t>(e)] = phi.coeff(e);
  return Poly(k, std::move(asc));
}

LaurentSeries laurent_invert(const LaurentSeries& phi, std::optional<std::size_t> prec) {
  Field k = phi.field();
  if (phi.is_zero()) throw Error(ErrorCode::ZeroSeries, "inverse of a zero series");
  long top = phi.top();
  std::size_t n;
  if (phi.is_exact()) {
    if (phi.precision() == 1)
      return LaurentSeries::from_terms(k, -top, {phi.coeff(top).inverse()}, true);
    if (!prec)
      throw Error(ErrorCode::InsufficientPrecision, "inverting an exact non-monomial needs a precision");
    n = *prec;
  } else {
    n = phi.precision();
    if (prec) n = std::min(n, *prec);
  }
  std::vector<Scalar> a(n, Scalar::zero(k));
  for (std::size_t i = 0; i < n && i < phi.precision(); ++i) a[i] = phi.coeff(top - static_cast<long>(i));
  std::vector<Scalar> b(n, Scalar::zero(k));
  Scalar inv0 = a[0].inverse();
  b[0] = inv0;
  for (std::size_t i = 1; i < n; ++i) {
    Scalar acc = Scalar::zero(k);
    for (std::size_t j = 1; j <= i; ++j) {
      if (a[j].is_zero()) continue;
      acc += a[j] * b[i - j];
    }
    b[i] = -acc * inv0;
  }
  return LaurentSeries::from_terms(k, -top, std::move(b), false);
}

}  // namespace pellsurf
