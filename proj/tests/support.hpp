#pragma once

#include <string>

#include "pellsurf/poly_text.hpp"

namespace testing {

inline pellsurf::Poly P(const std::string& text, const char* field = "Q") {
  return pellsurf::parse_poly(text, pellsurf::Field::parse(field)).poly;
}

inline pellsurf::Scalar S(long long v, const char* field = "Q") {
  return pellsurf::Scalar::from_int(pellsurf::Field::parse(field), v);
}

inline pellsurf::Scalar Sq(long num, long den) {
  return pellsurf::Scalar::from_mpq(pellsurf::Field::rationals(), mpq_class(num, den));
}

template <class F>
pellsurf::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const pellsurf::Error& e) {
    return e.code();
  }
  return static_cast<pellsurf::ErrorCode>(-1);
}

}  // namespace testing
