#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "germ/error.hpp"
#include "germ/rational.hpp"

namespace germ {

/// Dense univariate polynomial in q over the rationals. Coefficient n is the
/// coefficient of q^n; the representation never carries trailing zeros, so the
/// zero polynomial has an empty coefficient vector.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

  static Polynomial monomial(std::size_t n, const Rational& c = 1) {
    std::vector<Rational> v(n + 1);
    v[n] = c;
    return Polynomial(std::move(v));
  }

  /// 1 - q^n.
  static Polynomial one_minus_q_pow(std::size_t n) {
    std::vector<Rational> v(n + 1);
    v[0] += 1;
    v[n] -= 1;
    return Polynomial(std::move(v));
  }

  /// Polynomial with 0/1 coefficients taken from a bit sequence.
  static Polynomial from_bits(std::span<const std::uint8_t> bits, std::size_t offset = 0) {
    std::vector<Rational> v(offset + bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) v[offset + i] = 1;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational coefficient(std::size_t n) const { return n < c_.size() ? c_[n] : Rational(0); }

  const Rational& leading() const {
    if (c_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  /// Coefficient of the lowest-degree nonzero term.
  const Rational& lowest_nonzero() const {
    for (const auto& x : c_)
      if (x != 0) return x;
    throw PreconditionError("lowest coefficient of the zero polynomial");
  }

  Rational operator()(const Rational& q) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
    return acc;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial r = *this;
    const Rational lead = leading();
    for (auto& x : r.c_) x /= lead;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (b.c_[j] != 0) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = quotient * b + remainder, deg remainder < deg b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
    const Rational& lead = b.c_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
      const Rational f = rem[k + b.c_.size() - 1] / lead;
      quo[k] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
    }
    rem.resize(b.c_.size() - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  /// Monic greatest common divisor (zero only when both inputs are zero).
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second.monic();
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      if (p.c_[i] == 0) continue;
      if (!first) os << (p.c_[i] > 0 ? " + " : " - ");
      else if (p.c_[i] < 0) os << "-";
      Rational mag = abs(p.c_[i]);
      if (i == 0 || mag != 1) os << mag;
      if (i >= 1) os << (i == 0 || mag != 1 ? "*" : "") << "q";
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Synthetic division by (q - 1): f = (q - 1) * quotient + f(1).
inline std::pair<Polynomial, Rational> divide_by_q_minus_one(const Polynomial& f) {
  const auto& c = f.coefficients();
  if (c.empty()) return {Polynomial{}, Rational(0)};
  std::vector<Rational> suffix(c.size());
  Rational acc = 0;
  for (std::size_t j = c.size(); j-- > 0;) {
    acc += c[j];
    suffix[j] = acc;
  }
  Rational remainder = suffix[0];
  suffix.erase(suffix.begin());
  return {Polynomial(std::move(suffix)), remainder};
}

/// f = (1 - q)^order * g with g(1) = value != 0.
struct FactorAtOne {
  int order = 0;
  Rational value;
  Polynomial cofactor;
};

inline FactorAtOne factor_at_one(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("order at q=1 is undefined for the zero polynomial");
  FactorAtOne out;
  Polynomial cur = f;
  for (;;) {
    auto [quo, rem] = divide_by_q_minus_one(cur);
    if (rem != 0) {
      out.value = rem;
      out.cofactor = std::move(cur);
      return out;
    }
    // cur = (q - 1) quo = (1 - q)(-quo)
    cur = -quo;
    ++out.order;
  }
}

inline int order_at_one(const Polynomial& f) { return factor_at_one(f).order; }

/// Coefficients b_0..b_deg of f(1 - t) = sum b_k t^k.
inline std::vector<Rational> expand_at_one(const Polynomial& f) {
  std::vector<Rational> out;
  Polynomial cur = f;
  int s = 1;
  while (!cur.is_zero()) {
    auto [quo, rem] = divide_by_q_minus_one(cur);
    out.push_back(s > 0 ? rem : Rational(-rem));
    s = -s;
    cur = std::move(quo);
  }
  return out;
}

namespace detail {

struct OrderSign {
  int order = 0;  // meaningless when sign == 0
  int sign = 0;   // 0 iff the polynomial is identically zero
};

inline OrderSign order_sign_big(std::vector<Integer> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) return {};
  OrderSign out;
  int flip = 1;
  for (;;) {
    Integer acc = 0;
    for (std::size_t j = c.size(); j-- > 0;) {
      acc += c[j];
      c[j] = acc;
    }
    if (c[0] != 0) {
      out.sign = flip * sgn(c[0]);
      return out;
    }
    c.erase(c.begin());
    flip = -flip;
    ++out.order;
  }
}

/// Order of vanishing at q = 1 and sign just below 1 of an integer polynomial.
/// Runs the (q - 1) synthetic division in 128-bit arithmetic and falls back to
/// GMP when a partial sum would overflow.
inline OrderSign order_sign_at_one(std::span<const std::int64_t> coeffs) {
  std::vector<__int128> c(coeffs.begin(), coeffs.end());
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) return {};
  OrderSign out;
  int flip = 1;
  for (;;) {
    __int128 acc = 0;
    for (std::size_t j = c.size(); j-- > 0;) {
      if (__builtin_add_overflow(acc, c[j], &acc)) {
        std::vector<Integer> big(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) big[i] = static_cast<long>(coeffs[i]);
        return order_sign_big(std::move(big));
      }
      c[j] = acc;
    }
    if (c[0] != 0) {
      out.sign = flip * (c[0] > 0 ? 1 : -1);
      return out;
    }
    c.erase(c.begin());
    flip = -flip;
    ++out.order;
  }
}

}  // namespace detail

}  // namespace germ
