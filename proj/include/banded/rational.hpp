#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace banded {

/// Exact rational scalar used by every predicate in the library.
using Rational = mpq_class;

inline int sign(const Rational& v) { return sgn(v); }
// Three-way comparison without forming the difference.
inline int compare(const Rational& a, const Rational& b) { return cmp(a, b); }

/// num / den in canonical form. GMP needs canonical operands, so every
/// two-argument construction goes through here.
inline Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "12", "-0.125", "3/7", "1e-3" style tokens into an exact rational.
/// Throws std::invalid_argument on anything else (including "inf"/"nan").
Rational parse_rational(std::string_view text);

/// Canonical text form: a terminating decimal when the denominator has only
/// the prime factors 2 and 5, "p/q" otherwise. parse_rational inverts it.
std::string format_rational(const Rational& v);

/// Nearest double, for display and mesh viewers only.
inline double to_double(const Rational& v) { return v.get_d(); }

/// Exact rational value of a finite double.
Rational from_double(double v);

}  // namespace banded
