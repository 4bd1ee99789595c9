#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "germ/error.hpp"
#include "germ/polynomial.hpp"
#include "germ/rational.hpp"

namespace germ {

/// Laurent coefficients of a function about q = 1 in the variable t = 1 - q.
/// coefficients[i] is a_{order + i}; the last entry is a_depth.
struct GermExpansion {
  int order = 0;
  std::vector<Rational> coefficients;

  int depth() const { return order + static_cast<int>(coefficients.size()) - 1; }

  /// a_n; zero below the order. Throws past the computed depth.
  Rational coefficient(int n) const {
    if (n < order) return 0;
    if (n > depth()) throw PreconditionError("Laurent coefficient beyond computed depth");
    return coefficients[static_cast<std::size_t>(n - order)];
  }

  const Rational& leading() const { return coefficients.front(); }
};

namespace detail {

/// Laurent expansion of num/den at q = 1 without reducing the fraction first.
inline GermExpansion laurent(const Polynomial& num, const Polynomial& den, int depth) {
  if (den.is_zero()) throw PreconditionError("zero denominator");
  if (num.is_zero()) throw PreconditionError("Laurent expansion of the zero function");
  std::vector<Rational> n = expand_at_one(num);
  std::vector<Rational> d = expand_at_one(den);
  std::size_t vn = 0, vd = 0;
  while (n[vn] == 0) ++vn;
  while (d[vd] == 0) ++vd;
  const int order = static_cast<int>(vn) - static_cast<int>(vd);
  if (depth < order)
    throw PreconditionError("requested depth " + std::to_string(depth) + " is below the order " +
                            std::to_string(order));
  const std::size_t terms = static_cast<std::size_t>(depth - order) + 1;
  auto at = [](const std::vector<Rational>& v, std::size_t shift, std::size_t k) -> Rational {
    return shift + k < v.size() ? v[shift + k] : Rational(0);
  };
  GermExpansion out;
  out.order = order;
  out.coefficients.resize(terms);
  const Rational& d0 = d[vd];
  for (std::size_t j = 0; j < terms; ++j) {
    Rational acc = at(n, vn, j);
    for (std::size_t i = 1; i <= j; ++i) {
      const Rational di = at(d, vd, i);
      if (di != 0) acc -= di * out.coefficients[j - i];
    }
    out.coefficients[j] = acc / d0;
  }
  return out;
}

inline int sign_near_one(const Polynomial& num, const Polynomial& den) {
  if (num.is_zero()) return 0;
  return sign(factor_at_one(num).value) * sign(factor_at_one(den).value);
}

}  // namespace detail

/// Ratio of polynomials kept in canonical form: numerator and denominator are
/// coprime and the denominator's lowest-degree nonzero coefficient is 1. Two
/// rational functions are equal iff their representations are equal.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
    reduce();
  }

  static RationalFunction constant(const Rational& c) { return RationalFunction(Polynomial::constant(c)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Rational operator()(const Rational& q) const {
    const Rational d = den_(q);
    if (d == 0) throw PreconditionError("evaluation at a pole");
    return num_(q) / d;
  }

  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
    return {f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_};
  }
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
    return {f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_};
  }
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
    return {f.num_ * g.num_, f.den_ * g.den_};
  }
  friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
    if (g.is_zero()) throw PreconditionError("division by the zero rational function");
    return {f.num_ * g.den_, f.den_ * g.num_};
  }
  friend RationalFunction operator-(const RationalFunction& f) {
    RationalFunction r = f;
    r.num_ = -r.num_;
    return r;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << "(" << f.num_ << ")/(" << f.den_ << ")";
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = Polynomial::constant(1);
      return;
    }
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    const Rational lead = den_.lowest_nonzero();
    if (lead != 1) {
      const Rational inv = 1 / lead;
      num_ *= inv;
      den_ *= inv;
    }
  }

  Polynomial num_;
  Polynomial den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

inline RationalFunction ratfun_arith(const RationalFunction& f, const RationalFunction& g, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return f + g;
    case ArithOp::Sub: return f - g;
    case ArithOp::Mul: return f * g;
    case ArithOp::Div: return f / g;
  }
  throw PreconditionError("unknown arithmetic operation");
}

/// The v with f = (1 - q)^v g, g finite and nonzero at 1. Negative v is a pole.
inline int order_at_one(const RationalFunction& f) {
  if (f.is_zero()) throw PreconditionError("order at q=1 is undefined for the zero function");
  return order_at_one(f.numerator()) - order_at_one(f.denominator());
}

/// Coefficients a_v..a_depth of f in powers of t = 1 - q.
inline GermExpansion laurent_at_one(const RationalFunction& f, int depth) {
  return detail::laurent(f.numerator(), f.denominator(), depth);
}

/// Sign of f on (1 - eps, 1) for small enough eps; 0 iff f is identically zero.
inline int sign_near_one(const RationalFunction& f) {
  return detail::sign_near_one(f.numerator(), f.denominator());
}

}  // namespace germ
