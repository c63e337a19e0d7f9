#include "banded/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace banded {

namespace {

const Rational& field_of(const QuadNumber& l, const QuadNumber& r) { return sgn(l.b) != 0 ? l.d : r.d; }

// sign(x*sqrt(d1) + y*sqrt(d2))
int sign_root_sum(const Rational& x, const Rational& d1, const Rational& y, const Rational& d2) {
  int sx = sgn(d1) > 0 ? sgn(x) : 0;
  int sy = sgn(d2) > 0 ? sgn(y) : 0;
  if (sx == 0) return sy;
  if (sy == 0 || sx == sy) return sx;
  return sx * sgn(Rational(x * x * d1 - y * y * d2));
}

bool is_square(const Rational& v) {
  return sgn(v) >= 0 && mpz_perfect_square_p(v.get_num_mpz_t()) && mpz_perfect_square_p(v.get_den_mpz_t());
}

Rational exact_sqrt(const Rational& v) {
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), v.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), v.get_den_mpz_t());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

QuadNumber operator+(const QuadNumber& l, const QuadNumber& r) {
  return {Rational(l.a + r.a), Rational(l.b + r.b), field_of(l, r)};
}

QuadNumber operator-(const QuadNumber& l, const QuadNumber& r) {
  return {Rational(l.a - r.a), Rational(l.b - r.b), field_of(l, r)};
}

QuadNumber operator*(const QuadNumber& l, const QuadNumber& r) {
  const Rational& d = field_of(l, r);
  return {Rational(l.a * r.a + l.b * r.b * d), Rational(l.a * r.b + l.b * r.a), d};
}

bool operator==(const QuadNumber& l, const QuadNumber& r) { return compare(l, r) == 0; }

int sign(const QuadNumber& v) {
  int sa = sgn(v.a);
  int sb = sgn(v.d) > 0 ? sgn(v.b) : 0;
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  return sa * sgn(Rational(v.a * v.a - v.b * v.b * v.d));
}

int compare(const QuadNumber& l, const QuadNumber& r) {
  if (sgn(l.b) == 0 || sgn(r.b) == 0 || l.d == r.d) return sign(l - r);
  Rational A = l.a - r.a;
  Rational x = l.b;
  Rational y = -r.b;
  int sw = sign_root_sum(x, l.d, y, r.d);
  int sa = sgn(A);
  if (sw == 0) return sa;
  if (sa == 0 || sa == sw) return sw;
  // sign(A + W) = sign(A) * sign(A^2 - W^2)
  QuadNumber diff{Rational(A * A - x * x * l.d - y * y * r.d), Rational(-2 * x * y), Rational(l.d * r.d)};
  return sa * sign(diff);
}

double QuadNumber::approx() const { return a.get_d() + b.get_d() * std::sqrt(d.get_d()); }

std::string QuadNumber::to_string() const {
  if (is_rational()) return format_rational(a);
  return format_rational(a) + (sgn(b) < 0 ? " - " : " + ") + format_rational(abs(b)) + "*sqrt(" + format_rational(d) + ")";
}

Rational rational_between(const QuadNumber& lo, const QuadNumber& hi) {
  if (compare(lo, hi) >= 0) throw std::invalid_argument("rational_between: empty interval");
  double guess = 0.5 * (lo.approx() + hi.approx());
  if (std::isfinite(guess)) {
    Rational m(guess);
    if (compare(QuadNumber(m), lo) > 0 && compare(QuadNumber(m), hi) < 0) return m;
  }
  Rational l(0), h(1);
  if (compare(QuadNumber(l), lo) > 0) l = Rational(static_cast<long>(std::floor(lo.approx())) - 1);
  if (compare(QuadNumber(h), hi) < 0) h = Rational(static_cast<long>(std::ceil(hi.approx())) + 1);
  for (;;) {
    Rational m = (l + h) / 2;
    if (compare(QuadNumber(m), lo) <= 0) {
      l = m;
    } else if (compare(QuadNumber(m), hi) >= 0) {
      h = m;
    } else {
      return m;
    }
  }
}

Rational rational_bound(const QuadNumber& v, bool round_down, int bits) {
  if (v.is_rational()) return v.a;
  Rational l(static_cast<long>(std::floor(v.approx())) - 1);
  Rational h = l + 3;
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  Rational eps(mpz_class(1), two_pow);
  while (h - l > eps) {
    Rational m = (l + h) / 2;
    if (compare(QuadNumber(m), v) <= 0) {
      l = m;
    } else {
      h = m;
    }
  }
  return round_down ? l : h;
}

QuadNumber Quadratic::at(const QuadNumber& t) const {
  return QuadNumber(c0) + QuadNumber(c1) * t + QuadNumber(c2) * t * t;
}

std::vector<QuadNumber> roots_in_unit_interval(const Quadratic& q) {
  std::vector<QuadNumber> candidates;
  if (sgn(q.c2) == 0) {
    if (sgn(q.c1) != 0) candidates.emplace_back(Rational(-q.c0 / q.c1));
  } else {
    Rational disc = q.c1 * q.c1 - 4 * q.c2 * q.c0;
    Rational denom = 2 * q.c2;
    if (sgn(disc) == 0) {
      candidates.emplace_back(Rational(-q.c1 / denom));
    } else if (sgn(disc) > 0) {
      if (is_square(disc)) {
        Rational s = exact_sqrt(disc);
        candidates.emplace_back(Rational((-q.c1 + s) / denom));
        candidates.emplace_back(Rational((-q.c1 - s) / denom));
      } else {
        Rational a = -q.c1 / denom;
        Rational b = 1 / denom;
        candidates.emplace_back(a, b, disc);
        candidates.emplace_back(a, Rational(-b), disc);
      }
    }
  }
  std::vector<QuadNumber> out;
  for (auto& c : candidates) {
    if (sign(c) > 0 && compare(c, QuadNumber(1)) < 0) out.push_back(std::move(c));
  }
  sort_unique(out);
  return out;
}

void sort_unique(std::vector<QuadNumber>& values) {
  std::sort(values.begin(), values.end(), [](const QuadNumber& l, const QuadNumber& r) { return compare(l, r) < 0; });
  values.erase(std::unique(values.begin(), values.end(),
                           [](const QuadNumber& l, const QuadNumber& r) { return compare(l, r) == 0; }),
               values.end());
}

}  // namespace banded
