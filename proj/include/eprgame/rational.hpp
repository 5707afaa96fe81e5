#pragma once

#include <gmpxx.h>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace eprgame {

// Exact rational arithmetic (GMP). Every game quantity is an mpq_class value;
// doubles appear only in reports and displays.
using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize on its own; route all two-argument
// construction through here.
inline Rational ratio(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "7", "-3", "9/10", "-1/4". No whitespace, no signs in the
// denominator, denominator nonzero.
inline Rational parse_rational(const std::string& text) {
  const auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("not a rational: '" + text + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
  if (digits == 0) throw bad();
  if (i < text.size()) {
    if (text[i] != '/') throw bad();
    ++i;
    digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
    if (digits == 0 || i != text.size()) throw bad();
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) throw bad();
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

// "7/50", "3", "-1/4" -- the canonical text form of every format we emit.
inline std::string format_rational(const Rational& q) { return q.get_str(); }

// Decimal view with six significant digits. Display only; never parsed back.
inline std::string decimal6(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", q.get_d());
  return buf;
}

// Truncates toward zero at three decimal places, e.g. 10663/100000 -> "0.106".
inline std::string truncate3(const Rational& q) {
  mpz_class scaled_num = q.get_num() * 1000;
  mpz_class t;
  mpz_tdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
  bool negative = t < 0;
  mpz_class a = abs(t);
  mpz_class whole = a / 1000;
  unsigned long frac = mpz_class(a % 1000).get_ui();
  char buf[16];
  std::snprintf(buf, sizeof(buf), ".%03lu", frac);
  return (negative ? "-" : "") + whole.get_str() + buf;
}

}  // namespace eprgame
