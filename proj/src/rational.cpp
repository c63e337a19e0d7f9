#include "banded/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace banded {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not an exact number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d{std::string(den), 10};
    if (d == 0) bad(text);
    value = Rational(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      bool exp_neg = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_neg = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_neg) exponent = -exponent;
      s = s.substr(0, e);
    }
    auto dot = s.find('.');
    std::string digits;
    long frac_len = 0;
    if (dot == std::string_view::npos) {
      if (!all_digits(s)) bad(text);
      digits = std::string(s);
    } else {
      auto int_part = s.substr(0, dot);
      auto frac_part = s.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) bad(text);
      if (!int_part.empty() && !all_digits(int_part)) bad(text);
      if (!frac_part.empty() && !all_digits(frac_part)) bad(text);
      digits = std::string(int_part) + std::string(frac_part);
      frac_len = static_cast<long>(frac_part.size());
    }
    long scale = exponent - frac_len;
    mpz_class mantissa(digits, 10);
    if (scale >= 0) {
      value = Rational(mantissa * pow10(static_cast<unsigned long>(scale)));
    } else {
      value = Rational(mantissa, pow10(static_cast<unsigned long>(-scale)));
      value.canonicalize();
    }
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& v) {
  mpz_class den = v.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (den != 1) return v.get_num().get_str() + "/" + v.get_den().get_str();
  if (twos == 0 && fives == 0) return v.get_num().get_str();

  // Scale to an integer over 10^k.
  unsigned long k = twos > fives ? twos : fives;
  mpz_class scaled = v.get_num() * pow10(k) / v.get_den();
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= k) digits.insert(0, k - digits.size() + 1, '0');
  digits.insert(digits.size() - k, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return negative ? "-" + digits : digits;
}

Rational from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite coordinate");
  return Rational(v);
}

}  // namespace banded
