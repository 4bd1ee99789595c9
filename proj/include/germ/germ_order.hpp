#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "germ/error.hpp"
#include "germ/polynomial.hpp"
#include "germ/rational.hpp"
#include "germ/rational_function.hpp"
#include "germ/rational_set.hpp"

namespace germ {

enum class Relation { Less, Equal, Greater };

inline Relation relation_from_sign(int s) {
  return s < 0 ? Relation::Less : (s > 0 ? Relation::Greater : Relation::Equal);
}

inline Relation reverse(Relation r) {
  return r == Relation::Less ? Relation::Greater : (r == Relation::Greater ? Relation::Less : Relation::Equal);
}

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "less";
    case Relation::Equal: return "equal";
    case Relation::Greater: return "greater";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, Relation r) { return os << to_string(r); }

namespace detail {

/// S_q * (1 - q^L) as a polynomial, for L a multiple of the period of S.
inline std::vector<std::int64_t> gf_numerator_over(const RationalSet& s, std::size_t L) {
  const std::size_t N = s.preperiod_length();
  std::vector<std::int64_t> c(N + L, 0);
  for (std::size_t n = 0; n < N + L; ++n) {
    if (s.contains(n)) ++c[n];
    if (n >= L && s.contains(n - L)) --c[n];
  }
  return c;
}

inline std::vector<std::int64_t> difference_numerator(const RationalSet& a, const RationalSet& b, std::size_t& L) {
  L = std::lcm(a.period(), b.period());
  auto ca = gf_numerator_over(a, L);
  auto cb = gf_numerator_over(b, L);
  if (cb.size() > ca.size()) ca.resize(cb.size(), 0);
  for (std::size_t i = 0; i < cb.size(); ++i) ca[i] -= cb[i];
  return ca;
}

inline Polynomial to_polynomial(const std::vector<std::int64_t>& c) {
  std::vector<Rational> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = static_cast<long>(c[i]);
  return Polynomial(std::move(v));
}

}  // namespace detail

/// Generating function sum_{n in S} q^n as a reduced rational function.
inline RationalFunction gf_of_set(const RationalSet& s) {
  const Polynomial pre = Polynomial::from_bits(s.preperiod());
  if (s.is_finite()) return RationalFunction(pre);
  const std::size_t d = s.period();
  const Polynomial den = Polynomial::one_minus_q_pow(d);
  const Polynomial tail = Polynomial::from_bits(s.repetend(), s.preperiod_length());
  return {pre * den + tail, den};
}

struct GermOrderResult {
  Relation relation = Relation::Equal;
  /// Order of the first nonzero Laurent coefficient of S_q - S'_q.
  std::optional<int> witness_order;
  /// That coefficient; positive iff relation is Greater.
  std::optional<Rational> leading;
};

/// Germ ordering at 1^- of two rational sets; `Greater` means the first set
/// strictly dominates.
inline GermOrderResult germ_compare(const RationalSet& a, const RationalSet& b) {
  GermOrderResult out;
  if (a == b) return out;
  std::size_t L = 0;
  const auto diff = detail::difference_numerator(a, b, L);
  // S_q - S'_q = diff(q) / (1 - q^L); the denominator is positive on (0, 1)
  // and vanishes to order exactly 1 at q = 1.
  const auto os = detail::order_sign_at_one(diff);
  if (os.sign == 0) throw std::logic_error("distinct canonical sets with equal generating functions");
  out.relation = relation_from_sign(os.sign);
  out.witness_order = os.order - 1;
  out.leading = detail::laurent(detail::to_polynomial(diff), Polynomial::one_minus_q_pow(L), *out.witness_order)
                    .leading();
  return out;
}

/// (a_{-1}, a_0): density and constant term of the germ. Every value is
/// checked against the attainable shapes (0, k), (1, -k), (p, x) with 0 < p < 1.
class Valuation {
 public:
  Valuation(Rational density, Rational constant) : density_(std::move(density)), constant_(std::move(constant)) {
    if (!admissible(density_, constant_))
      throw std::logic_error("valuation (" + germ::to_string(density_) + ", " + germ::to_string(constant_) +
                             ") has an unattainable shape");
  }

  static bool admissible(const Rational& p, const Rational& x) {
    if (p == 0) return x.get_den() == 1 && x >= 0;
    if (p == 1) return x.get_den() == 1 && x <= 0;
    return p > 0 && p < 1;
  }

  const Rational& density() const { return density_; }
  const Rational& constant() const { return constant_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

  /// Lexicographic order on (density, constant).
  friend Relation compare(const Valuation& a, const Valuation& b) {
    if (a.density_ != b.density_) return a.density_ < b.density_ ? Relation::Less : Relation::Greater;
    if (a.constant_ != b.constant_) return a.constant_ < b.constant_ ? Relation::Less : Relation::Greater;
    return Relation::Equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    return os << "(" << v.density_ << ", " << v.constant_ << ")";
  }

 private:
  Rational density_;
  Rational constant_;
};

inline Valuation valuation(const RationalSet& s) {
  if (s.is_empty()) return {0, 0};
  const auto f = gf_of_set(s);
  const auto e = laurent_at_one(f, 0);
  return {e.coefficient(-1), e.coefficient(0)};
}

/// Lim-inf preorder on rational sets: lexicographic comparison of valuations.
inline Relation liminf_compare(const RationalSet& a, const RationalSet& b) {
  return compare(valuation(a), valuation(b));
}

/// True iff the k-th smallest element of `a` is at most the k-th smallest
/// element of `b` for every k. Both sets must be infinite.
inline bool outpacing_dominates(const RationalSet& a, const RationalSet& b) {
  if (a.is_finite() || b.is_finite()) throw PreconditionError("outpacing is defined for infinite sets only");
  const std::uint64_t ra = a.ones_in_period(), rb = b.ones_in_period();
  const std::uint64_t da = a.period(), db = b.period();
  // Eventually s_k grows like (d / r) k. Unequal slopes settle the tail.
  if (da * rb > db * ra) return false;
  const std::uint64_t start = std::max<std::uint64_t>(a.ones_in_preperiod(), b.ones_in_preperiod());
  // With equal slopes the gap s_k - s'_k is periodic in k with period lcm(ra, rb)
  // once both enumerations are inside their repetends. With a strictly smaller
  // slope it only decreases from there, so one joint period is still enough.
  const std::uint64_t horizon = start + std::lcm(ra, rb);
  for (std::uint64_t k = 0; k < horizon; ++k)
    if (*a.element(k) > *b.element(k)) return false;
  return true;
}

}  // namespace germ
