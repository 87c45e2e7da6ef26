#include "pellsurf/poly_text.hpp"

#include <cctype>
#include <map>
#include <string>

namespace pellsurf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Field field) : s_(text), field_(field) {}

  ParsedPoly run() {
    std::map<std::size_t, Scalar> terms;
    skip_ws();
    if (pos_ >= s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      bool had_sign = false;
      if (accept_minus()) { sign = -1; had_sign = true; }
      else if (peek() == '+') { ++pos_; had_sign = true; }
      if (!first && !had_sign) fail("expected '+' or '-'");
      first = false;
      skip_ws();
      auto [coef, exp] = term();
      if (sign < 0) coef = -coef;
      auto it = terms.find(exp);
      if (it == terms.end()) terms.emplace(exp, coef);
      else it->second += coef;
    }
    std::size_t top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<Scalar> cs(top + 1, Scalar::zero(field_));
    for (auto& [e, c] : terms) cs[e] += c;
    return {Poly(field_, std::move(cs)), var_ ? var_ : 'u'};
  }

 private:
  std::string_view s_;
  Field field_;
  std::size_t pos_ = 0;
  char var_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept_minus() {
    if (peek() == '-') { ++pos_; return true; }
    if (s_.substr(pos_).starts_with("\xE2\x88\x92")) { pos_ += 3; return true; }
    return false;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  std::pair<Scalar, std::size_t> term() {
    Scalar coef = Scalar::one(field_);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer();
      skip_ws();
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        den = integer();
        if (den == 0) { pos_ = at; fail("zero denominator"); }
      }
      try {
        coef = Scalar::from_mpq(field_, mpq_class(num, den));
      } catch (const Error&) {
        fail("coefficient not in " + field_.name());
      }
      have_coef = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected variable after '*'");
      }
    }
    std::size_t exp = 0;
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      char v = peek();
      if (var_ && v != var_) fail(std::string("second variable '") + v + "'");
      var_ = v;
      ++pos_;
      if (std::isalpha(static_cast<unsigned char>(peek()))) fail("variables are single letters");
      exp = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        mpz_class e = integer();
        if (!e.fits_ulong_p() || e > 100000) fail("exponent too large");
        exp = e.get_ui();
      }
    } else if (!have_coef) {
      fail("expected a term");
    }
    return {coef, exp};
  }
};

}  // namespace

ParsedPoly parse_poly(std::string_view text, Field field) {
  return Parser(text, field).run();
}

}  // namespace pellsurf
