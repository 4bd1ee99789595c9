#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "germ/error.hpp"
#include "germ/rational.hpp"

namespace germ {

using Membership = std::function<bool(std::uint64_t)>;

struct ProbeSample {
  Rational q;
  /// sum_{n < horizon} (1_S(n) - 1_S'(n)) q^n, exactly.
  Rational partial_difference;
  /// q^horizon / (1 - q): bounds the discarded tail in absolute value.
  Rational tail_bound;
  /// Sign of the full difference when |partial| exceeds the tail bound, else 0.
  int certified_sign = 0;
};

/// Exact partial sums of S_q - S'_q for sets given only by membership. This is
/// a demonstration tool for sets that are not rational; it decides nothing
/// about the germ order by itself.
inline std::vector<ProbeSample> numeric_probe(const Membership& a, const Membership& b,
                                              const std::vector<Rational>& q_values, std::uint64_t horizon) {
  if (horizon == 0) throw PreconditionError("probe horizon must be positive");
  std::vector<int> coeff(horizon);
  for (std::uint64_t n = 0; n < horizon; ++n) coeff[n] = (a(n) ? 1 : 0) - (b(n) ? 1 : 0);

  std::vector<ProbeSample> out;
  for (const auto& q : q_values) {
    if (q <= 0 || q >= 1) throw PreconditionError("probe points must lie in (0, 1)");
    const Integer p = q.get_num(), r = q.get_den();
    // T_n = sum_{j <= n} c_j p^j r^(n - j); the partial sum is T_{H-1} / r^(H-1).
    Integer total = 0, p_pow = 1;
    for (std::uint64_t n = 0; n < horizon; ++n) {
      if (n > 0) {
        total *= r;
        p_pow *= p;
      }
      if (coeff[n] > 0) total += p_pow;
      else if (coeff[n] < 0) total -= p_pow;
    }
    Integer r_pow;
    mpz_pow_ui(r_pow.get_mpz_t(), r.get_mpz_t(), horizon - 1);
    ProbeSample s;
    s.q = q;
    s.partial_difference = Rational(total, r_pow);
    s.partial_difference.canonicalize();
    Integer q_num_pow, q_den_pow;
    mpz_pow_ui(q_num_pow.get_mpz_t(), p.get_mpz_t(), horizon);
    mpz_pow_ui(q_den_pow.get_mpz_t(), r.get_mpz_t(), horizon);
    s.tail_bound = Rational(q_num_pow, q_den_pow) / (1 - q);
    s.tail_bound.canonicalize();
    if (abs(s.partial_difference) > s.tail_bound) s.certified_sign = sign(s.partial_difference);
    out.push_back(std::move(s));
  }
  return out;
}

/// Naturals whose decimal expansion has an even number of digits (0 has one).
inline bool has_even_digit_count(std::uint64_t n) {
  int digits = 1;
  while (n >= 10) {
    n /= 10;
    ++digits;
  }
  return digits % 2 == 0;
}

}  // namespace germ
