#pragma once

#include "banded/rational.hpp"

#include <string>
#include <vector>

namespace banded {

/// a + b*sqrt(d) with rational a, b and d >= 0. Arithmetic between two values
/// is only defined when they share d (or one of them has b == 0).
struct QuadNumber {
  Rational a;
  Rational b;
  Rational d;

  QuadNumber() = default;
  QuadNumber(int v) : a(v) {}  // NOLINT(google-explicit-constructor)
  QuadNumber(Rational v) : a(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  QuadNumber(Rational a_, Rational b_, Rational d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {}

  bool is_rational() const { return sgn(b) == 0; }
  double approx() const;
  std::string to_string() const;

  friend QuadNumber operator+(const QuadNumber& l, const QuadNumber& r);
  friend QuadNumber operator-(const QuadNumber& l, const QuadNumber& r);
  friend QuadNumber operator*(const QuadNumber& l, const QuadNumber& r);
  QuadNumber& operator+=(const QuadNumber& r) { return *this = *this + r; }
  friend bool operator==(const QuadNumber& l, const QuadNumber& r);
};

int sign(const QuadNumber& v);

/// Exact three-way comparison; the two values may live in different fields.
int compare(const QuadNumber& l, const QuadNumber& r);

/// A rational strictly between lo < hi. Throws std::invalid_argument if lo >= hi.
Rational rational_between(const QuadNumber& lo, const QuadNumber& hi);

/// Rational r with |r - v| < 2^-bits and r <= v (round_down) or r >= v.
Rational rational_bound(const QuadNumber& v, bool round_down, int bits = 48);

/// c0 + c1 t + c2 t^2.
struct Quadratic {
  Rational c0;
  Rational c1;
  Rational c2;

  bool is_zero() const { return sgn(c0) == 0 && sgn(c1) == 0 && sgn(c2) == 0; }
  QuadNumber at(const QuadNumber& t) const;
};

/// Real roots inside the open interval (0, 1), exact and increasing; empty
/// for the zero polynomial.
std::vector<QuadNumber> roots_in_unit_interval(const Quadratic& q);

/// Sorts and removes exact duplicates.
void sort_unique(std::vector<QuadNumber>& values);

}  // namespace banded
