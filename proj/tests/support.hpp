#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "germ/germ.hpp"

namespace testing_support {

using germ::Polynomial;
using germ::Rational;
using germ::RationalSet;

inline Rational R(const char* s) { return germ::parse_rational(s); }
inline RationalSet S(const char* s) { return RationalSet::parse(s); }

/// Closed-form (a_{-1}, a_0) of an eventually periodic set: each periodic
/// element k contributes q^k / (1 - q^d) = 1/(d t) + (d-1)/(2d) - k/d + O(t).
inline std::pair<Rational, Rational> valuation_formula(const RationalSet& s) {
  const auto N = s.preperiod_length(), d = s.period();
  Rational density = 0, constant = 0;
  for (std::size_t n = 0; n < N; ++n)
    if (s.preperiod()[n]) constant += 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (!s.repetend()[i]) continue;
    density += germ::ratio(1, static_cast<long>(d));
    constant += germ::ratio(static_cast<long>(d) - 1, 2 * static_cast<long>(d)) - germ::ratio(static_cast<long>(N + i), static_cast<long>(d));
  }
  return {density, constant};
}

/// Sign of p on (1 - eps, 1) for small eps: p(1 - h/(1+s)) (1+s)^n with h = 2^-j
/// has no sign variations once (1 - h, 1) is root-free, and then any point
/// inside decides.
inline int certified_sign_near_one(const Polynomial& p) {
  if (p.is_zero()) return 0;
  const int n = p.degree();
  for (int j = 1; j < 400; ++j) {
    const Rational h = Rational(1) / Rational(germ::Integer(1) << j);
    // 1 - h/(1+s) = (1 - h + s)/(1 + s)
    const Polynomial num{1 - h, 1}, den{1, 1};
    Polynomial acc;
    std::vector<Polynomial> npow{Polynomial::constant(1)}, dpow{Polynomial::constant(1)};
    for (int i = 1; i <= n; ++i) {
      npow.push_back(npow.back() * num);
      dpow.push_back(dpow.back() * den);
    }
    for (int i = 0; i <= n; ++i) acc += p.coefficient(i) * (npow[i] * dpow[n - i]);
    int last = 0, changes = 0;
    for (const auto& c : acc.coefficients()) {
      const int s = sgn(c);
      if (s == 0) continue;
      if (last && s != last) ++changes;
      last = s;
    }
    if (changes == 0) return sgn(p(1 - h / 2));
  }
  throw std::runtime_error("no root-free interval found");
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, int range) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-range, range);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return Polynomial(std::move(c));
}

/// Nonzero polynomial, optionally with extra (1 - q) factors to exercise poles and zeros at 1.
inline Polynomial random_nonzero(std::mt19937_64& rng, int max_degree, int range) {
  Polynomial p;
  while (p.is_zero()) p = random_polynomial(rng, max_degree, range);
  const int extra = static_cast<int>(rng() % 3);
  for (int i = 0; i < extra; ++i) p = p * Polynomial{1, -1};
  return p;
}

/// Sorted elements below `limit`, enumerated by membership.
inline std::vector<std::uint64_t> elements_below(const RationalSet& s, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n < limit; ++n)
    if (s.contains(n)) out.push_back(n);
  return out;
}

}  // namespace testing_support
