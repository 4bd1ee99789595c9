#pragma once

// Brute-force cross-checks that share no code path with the analytic
// germ comparison or the cycle search.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "germ/avoidance.hpp"
#include "germ/distance_set.hpp"
#include "germ/error.hpp"
#include "germ/germ_order.hpp"
#include "germ/rational.hpp"
#include "germ/rational_set.hpp"

namespace germ::oracle {

namespace detail {

/// Integer polynomial whose sign on (0, 1) is that of gf(a) - gf(b): both
/// series are put over 1 - q^L, which is positive there.
inline std::vector<Integer> scaled_difference(const RationalSet& a, const RationalSet& b) {
  const std::size_t L = std::lcm(a.period(), b.period());
  const std::size_t N = std::max(a.preperiod_length(), b.preperiod_length());
  std::vector<Integer> c(N + L, 0);
  auto add = [&](const RationalSet& s, int sgn) {
    // sum_{n<N+L} 1_S(n) q^n (1 - q^L) truncated: the series times (1 - q^L)
    // is a polynomial of degree < N + L.
    for (std::size_t n = 0; n < N + L; ++n) {
      int v = s.contains(n) ? 1 : 0;
      if (n >= L && s.contains(n - L)) v -= 1;
      c[n] += sgn * v;
    }
  };
  add(a, 1);
  add(b, -1);
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

/// (1 + s)^n g(1 - 1/(M (1 + s))) * M^n as integer coefficients in s.
inline std::vector<Integer> moebius(const std::vector<Integer>& g, const Integer& M) {
  const std::size_t n = g.size() - 1;
  // u = M (1 + s) - 1, v = M (1 + s); term_i = g_i u^i v^(n-i).
  std::vector<Integer> out(n + 1, 0);
  std::vector<std::vector<Integer>> upow(n + 1), vpow(n + 1);
  upow[0] = vpow[0] = {1};
  auto times_linear = [](const std::vector<Integer>& p, const Integer& c0, const Integer& c1) {
    std::vector<Integer> r(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i] += p[i] * c0;
      r[i + 1] += p[i] * c1;
    }
    return r;
  };
  for (std::size_t i = 1; i <= n; ++i) {
    upow[i] = times_linear(upow[i - 1], M - 1, M);
    vpow[i] = times_linear(vpow[i - 1], M, M);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (g[i] == 0) continue;
    const auto& u = upow[i];
    const auto& v = vpow[n - i];
    for (std::size_t x = 0; x < u.size(); ++x)
      for (std::size_t y = 0; y < v.size(); ++y) out[x + y] += g[i] * u[x] * v[y];
  }
  return out;
}

inline std::size_t sign_variations(const std::vector<Integer>& p) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : p) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// Sign of gf(a) - gf(b) near 1 by exact evaluation at q = 1 - 1/(2M), where
/// M doubles until Descartes' rule certifies no root on (1 - 1/M, 1).
inline Relation evaluation_compare(const RationalSet& a, const RationalSet& b, unsigned max_doublings = 200) {
  const auto g = detail::scaled_difference(a, b);
  if (g.empty()) return Relation::Equal;
  Integer M = 2;
  for (unsigned step = 0; step < max_doublings; ++step, M *= 2) {
    if (detail::sign_variations(detail::moebius(g, M)) != 0) continue;
    // g((2M-1)/(2M)) (2M)^n
    const std::size_t n = g.size() - 1;
    Integer value = 0, p = 1;
    std::vector<Integer> hi(n + 1);
    hi[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) hi[i] = hi[i - 1] * (2 * M);
    for (std::size_t i = 0; i <= n; ++i) {
      value += g[i] * p * hi[n - i];
      p *= 2 * M - 1;
    }
    return relation_from_sign(sgn(value));
  }
  throw BudgetError("evaluation oracle did not isolate the germ");
}

/// Largest |T| for T in Z/n whose periodic extension T + nZ is D-avoiding.
inline std::size_t cyclic_max_avoiding(const DistanceSet& d, std::size_t n) {
  std::vector<std::size_t> gaps;
  for (auto delta : d.distances()) {
    if (delta % n == 0) return 0;
    gaps.push_back(delta % n);
  }
  // Exhaustive over subsets: bit i of `t` is membership of i.
  if (n <= 16) {
    std::size_t best = 0;
    for (std::uint32_t t = 0; t < (1u << n); ++t) {
      const auto size = static_cast<std::size_t>(std::popcount(t));
      if (size <= best) continue;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        if (t >> i & 1)
          for (auto g : gaps)
            if (t >> ((i + g) % n) & 1) ok = false;
      if (ok) best = size;
    }
    return best;
  }
  // Left-to-right over positions with the first M bits pinned and the last M
  // bits as state; wrap-around pairs are checked against the pinned bits.
  const unsigned M = d.max();
  if (n <= M) throw PreconditionError("cyclic oracle needs n > max(D) beyond 16");
  const std::uint32_t mask = (1u << M) - 1u;
  std::uint32_t forbid = 0;
  for (auto delta : d.distances()) forbid |= 1u << (delta - 1);
  std::size_t best = 0;
  for (std::uint32_t head = 0; head <= mask; ++head) {
    // Bit j of head is membership of position j.
    bool ok = true;
    for (unsigned j = 0; j < M && ok; ++j)
      if (head >> j & 1)
        for (auto delta : d.distances())
          if (j + delta < M && (head >> (j + delta) & 1)) ok = false;
    if (!ok) continue;
    // state bit j-1: membership of position i - j.
    std::uint32_t init = 0;
    for (unsigned j = 1; j <= M; ++j) init |= (head >> (M - j) & 1u) << (j - 1);
    std::vector<int> cur(mask + 1, -1), nxt(mask + 1);
    cur[init] = std::popcount(head);
    for (std::size_t i = M; i < n; ++i) {
      std::fill(nxt.begin(), nxt.end(), -1);
      for (std::uint32_t st = 0; st <= mask; ++st) {
        if (cur[st] < 0) continue;
        for (std::uint32_t b = 0; b < 2; ++b) {
          if (b) {
            if (st & forbid) continue;
            bool wrap_ok = true;
            for (auto delta : d.distances())
              if (i + delta >= n && (head >> (i + delta - n) & 1)) wrap_ok = false;
            if (!wrap_ok) continue;
          }
          const std::uint32_t ns = ((st << 1) | b) & mask;
          nxt[ns] = std::max(nxt[ns], cur[st] + static_cast<int>(b));
        }
      }
      std::swap(cur, nxt);
    }
    best = std::max<std::size_t>(best, static_cast<std::size_t>(*std::max_element(cur.begin(), cur.end())));
  }
  return best;
}

/// Best density of a periodic D-avoiding set with period at most `max_period`.
inline Rational periodic_density(const DistanceSet& d, std::size_t max_period) {
  Rational best = 0;
  for (std::size_t n = 1; n <= max_period; ++n) {
    const Rational r = ratio(static_cast<long>(cyclic_max_avoiding(d, n)), static_cast<long>(n));
    if (r > best) best = r;
  }
  return best;
}

/// Germ-greatest D-avoiding set agreeing with `s` from position W on, by
/// enumerating all 2^W prefixes.
inline RationalSet best_prefix(const RationalSet& s, const DistanceSet& d, std::size_t W) {
  if (W > 24) throw BudgetError("brute-force prefix search limited to W <= 24");
  std::optional<RationalSet> best;
  const std::size_t N = std::max(W, s.preperiod_length());
  for (std::uint64_t prefix = 0; prefix < (std::uint64_t{1} << W); ++prefix) {
    RationalSet cand = RationalSet::from_predicate(
        [&](std::uint64_t n) { return n < W ? (prefix >> n & 1) != 0 : s.contains(n); }, N, s.period());
    if (!is_avoiding(cand, d)) continue;
    if (!best || germ_compare(cand, *best).relation == Relation::Greater) best = std::move(cand);
  }
  if (!best) throw PreconditionError("no avoiding set with this tail");
  return *best;
}

}  // namespace germ::oracle
