#pragma once

#include <gmpxx.h>

#include <string>

namespace yh {

// Arbitrary-precision rational; always kept canonical by GMP.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace yh
