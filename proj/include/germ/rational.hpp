#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "germ/error.hpp"

namespace germ {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// n/d in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational ratio(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

inline Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw ParseError("malformed rational '" + s + "'");
    return Rational(Integer(s[0] == '+' ? s.substr(1) : s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw ParseError("malformed rational '" + s + "'");
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational r(Integer(num[0] == '+' ? num.substr(1) : num), d);
  r.canonicalize();
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace germ
