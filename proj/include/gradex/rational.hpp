#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gradex {

/// Exact arbitrary-precision rational. All arithmetic in the library is
/// exact; there is no floating point anywhere.
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational rational_from(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace gradex
