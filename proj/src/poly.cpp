#include "pellsurf/poly.hpp"

#include <algorithm>
#include <map>

namespace pellsurf {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.field() != field_)
      throw Error(ErrorCode::FieldMismatch, "coefficient field differs from polynomial field");
  normalize();
}

Poly Poly::constant(const Scalar& c) {
  Poly p(c.field());
  if (!c.is_zero()) p.coeffs_.push_back(c);
  return p;
}

Poly Poly::monomial(const Scalar& c, std::size_t k) {
  Poly p(c.field());
  if (c.is_zero()) return p;
  p.coeffs_.assign(k + 1, Scalar::zero(c.field()));
  p.coeffs_[k] = c;
  return p;
}

Poly Poly::from_ints(Field f, std::initializer_list<long long> ascending) {
  std::vector<Scalar> cs;
  cs.reserve(ascending.size());
  for (long long v : ascending) cs.push_back(Scalar::from_int(f, v));
  return Poly(f, std::move(cs));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (field_ != o.field_)
    throw Error(ErrorCode::FieldMismatch,
                "polynomials over " + field_.name() + " and " + o.field_.name());
}

Scalar Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
}

const Scalar& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
  return coeffs_.back();
}

Poly Poly::operator-() const {
  Poly r(field_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.normalize();
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& c) {
  if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "scalar field differs");
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(Scalar::one(field_)), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Scalar Poly::eval(const Scalar& at) const {
  if (at.field() != field_) throw Error(ErrorCode::FieldMismatch, "evaluation point field differs");
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  check_same(inner);
  Poly acc(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

Poly Poly::derivative() const {
  Poly r(field_);
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    r.coeffs_.push_back(coeffs_[i] * Scalar::from_int(field_, static_cast<long long>(i)));
  r.normalize();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

std::string Poly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    bool negative = field_.is_rational() && sgn(c.rational()) < 0;
    Scalar mag = negative ? -c : c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    std::string mono;
    if (k >= 1) mono = std::string(1, var) + (k >= 2 ? "^" + std::to_string(k) : "");
    if (k == 0) out += mag.to_string();
    else if (mag.is_one()) out += mono;
    else out += mag.to_string() + "*" + mono;
  }
  return out;
}

DivRem divrem(const Poly& f, const Poly& h) {
  if (f.field() != h.field()) throw Error(ErrorCode::FieldMismatch, "divrem across fields");
  if (h.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  Field k = f.field();
  if (f.degree() < h.degree()) return {Poly(k), f};
  std::vector<Scalar> rem = f.coeffs();
  std::vector<Scalar> quot(static_cast<std::size_t>(f.degree() - h.degree() + 1), Scalar::zero(k));
  Scalar inv = h.leading().inverse();
  const auto& hc = h.coeffs();
  std::size_t dh = static_cast<std::size_t>(h.degree());
  for (std::size_t i = quot.size(); i-- > 0;) {
    Scalar q = rem[i + dh] * inv;
    quot[i] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dh; ++j) rem[i + j] -= q * hc[j];
  }
  rem.resize(dh, Scalar::zero(k));
  return {Poly(k, std::move(quot)), Poly(k, std::move(rem))};
}

Poly exact_div(const Poly& f, const Poly& h) {
  auto [q, r] = divrem(f, h);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "division is not exact");
  return q;
}

Poly gcd(const Poly& f, const Poly& h) {
  if (f.field() != h.field()) throw Error(ErrorCode::FieldMismatch, "gcd across fields");
  Poly a = f.monic(), b = h.monic();
  while (!b.is_zero()) {
    Poly r = divrem(a, b).rem.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::pair<Poly, Scalar> content_normalize(const Poly& f) {
  if (f.is_zero()) return {f, Scalar::one(f.field())};
  return {f.monic(), f.leading()};
}

Poly hasse_derivative(const Poly& f, unsigned j) {
  Field k = f.field();
  if (f.degree() < static_cast<int>(j)) return Poly(k);
  std::vector<Scalar> out(static_cast<std::size_t>(f.degree()) - j + 1, Scalar::zero(k));
  for (std::size_t n = j; n < f.coeffs().size(); ++n)
    out[n - j] = f.coeffs()[n] * binomial(k, static_cast<long long>(n), j);
  return Poly(k, std::move(out));
}

std::optional<Poly> poly_sqrt(const Poly& f) {
  Field k = f.field();
  if (f.is_zero()) return f;
  if (f.degree() % 2 != 0) return std::nullopt;
  auto root = f.leading().sqrt();
  if (!root) return std::nullopt;
  std::size_t m = static_cast<std::size_t>(f.degree()) / 2;
  // top[i] is the coefficient of u^(m-i).
  std::vector<Scalar> top(m + 1, Scalar::zero(k));
  top[0] = *root;
  Scalar inv2r = (Scalar::from_int(k, 2) * *root).inverse();
  for (std::size_t i = 1; i <= m; ++i) {
    Scalar acc = f.coeff(2 * m - i);
    for (std::size_t j = 1; j < i; ++j) acc -= top[j] * top[i - j];
    top[i] = acc * inv2r;
  }
  std::vector<Scalar> asc(top.rbegin(), top.rend());
  Poly s(k, std::move(asc));
  if (s * s != f) return std::nullopt;
  return s;
}

std::optional<Poly> pth_root(const Poly& f) {
  Field k = f.field();
  if (k.is_rational()) {
    if (f.is_constant()) return f;
    return std::nullopt;
  }
  std::size_t p = static_cast<std::size_t>(k.characteristic());
  const auto& cs = f.coeffs();
  if (cs.empty()) return f;
  std::vector<Scalar> out((cs.size() - 1) / p + 1, Scalar::zero(k));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_zero()) continue;
    if (i % p != 0) return std::nullopt;
    out[i / p] = cs[i];  // Frobenius is the identity on F_p
  }
  return Poly(k, std::move(out));
}

namespace {

void squarefree_parts(const Poly& f, int factor, std::map<int, Poly>& out) {
  if (f.degree() <= 0) return;
  auto add = [&](const Poly& part, int m) {
    auto it = out.find(m);
    if (it == out.end()) out.emplace(m, part);
    else it->second *= part;
  };
  int p = static_cast<int>(f.field().characteristic());
  Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree_parts(*pth_root(f), factor * p, out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = exact_div(f, c);
  for (int i = 1; w.degree() > 0; ++i) {
    Poly y = gcd(w, c);
    Poly fac = exact_div(w, y);
    if (fac.degree() > 0) add(fac.monic(), i * factor);
    w = y;
    c = exact_div(c, y);
  }
  if (c.degree() > 0) {
    auto r = pth_root(c);
    if (!r) throw Error(ErrorCode::InconsistentState, "squarefree decomposition left a non-p-th power");
    squarefree_parts(r->monic(), factor * p, out);
  }
}

}  // namespace

MultiplicityProfile multiplicity_profile(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "multiplicity profile of zero");
  MultiplicityProfile prof{f.leading(), {}, 0, false};
  prof.derivative_vanishes = f.degree() >= 1 && f.derivative().is_zero();
  std::map<int, Poly> parts;
  squarefree_parts(f.monic(), 1, parts);
  for (auto& [m, part] : parts) {
    prof.parts.push_back({part, m});
    if (m == 1) prof.simple_root_count = part.degree();
  }
  return prof;
}

Poly MultiplicityProfile::reconstruct() const {
  Poly acc = Poly::constant(leading);
  for (const auto& pt : parts) acc *= pt.part.pow(static_cast<unsigned>(pt.multiplicity));
  return acc;
}

Poly MultiplicityProfile::part_with_multiplicity(int m) const {
  for (const auto& pt : parts)
    if (pt.multiplicity == m) return pt.part;
  return Poly::constant(Scalar::one(leading.field()));
}

int MultiplicityProfile::distinct_root_count() const {
  int n = 0;
  for (const auto& pt : parts) n += pt.part.degree();
  return n;
}

}  // namespace pellsurf
