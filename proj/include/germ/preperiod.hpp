#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "germ/avoidance.hpp"
#include "germ/cycle_search.hpp"
#include "germ/distance_set.hpp"
#include "germ/error.hpp"
#include "germ/germ_order.hpp"
#include "germ/rational_set.hpp"

namespace germ {

namespace detail {

/// Two sets that agree from W on differ by a polynomial of degree < W, and its
/// sign near q = 1 is that of the first nonzero t-coefficient of
/// sum c_n (1 - t)^n. Adding n to a set therefore adds the vector
/// ((-1)^k C(n, k))_{k < W} to a key whose lexicographic order is the germ order.
class PrefixKeys {
 public:
  explicit PrefixKeys(std::size_t window) : w_(window), table_(window * window, 0) {
    for (std::size_t n = 0; n < w_; ++n) {
      for (std::size_t k = 0; k <= n && k < w_; ++k) {
        __int128 c = (k == 0 || k == n) ? 1 : binom(n - 1, k - 1) + binom(n - 1, k);
        table_[n * w_ + k] = c;
      }
    }
    for (std::size_t n = 0; n < w_; ++n)
      for (std::size_t k = 1; k < w_; k += 2) table_[n * w_ + k] = -table_[n * w_ + k];
  }

  std::size_t window() const { return w_; }

  void add(std::size_t n, __int128* key) const {
    const __int128* row = &table_[n * w_];
    for (std::size_t k = 0; k < w_; ++k) key[k] += row[k];
  }

  bool less(const __int128* a, const __int128* b) const {
    for (std::size_t k = 0; k < w_; ++k)
      if (a[k] != b[k]) return a[k] < b[k];
    return false;
  }

 private:
  // Only used while the table still holds unsigned binomials.
  __int128 binom(std::size_t n, std::size_t k) const { return k > n ? 0 : table_[n * w_ + k]; }

  std::size_t w_;
  std::vector<__int128> table_;
};

}  // namespace detail

/// Germ-greatest D-avoiding set among those agreeing with S at every position
/// >= W. Equivalent to trying all 2^W prefixes; runs as a dynamic program over
/// (position, last max(D) bits).
inline RationalSet improve_preperiod(const RationalSet& s, const DistanceSet& d, std::size_t W,
                                     const SearchBudget& budget = {}) {
  if (!is_avoiding(s, d)) throw PreconditionError("improve_preperiod needs a D-avoiding starting set");
  if (W == 0) return s;
  if (W > budget.max_window)
    throw BudgetError("preperiod window " + std::to_string(W) + " exceeds the budget of " +
                      std::to_string(budget.max_window));
  const unsigned M = d.max();
  const std::size_t states = std::size_t{1} << M;
  if (static_cast<std::uint64_t>(W) * W * states > budget.max_prefix_cells)
    throw BudgetError("preperiod search with W = " + std::to_string(W) + " and max(D) = " + std::to_string(M) +
                      " exceeds the search budget");
  const std::uint32_t mask = static_cast<std::uint32_t>(states - 1);
  std::uint32_t forbid = 0;
  for (auto delta : d.distances()) forbid |= 1u << (delta - 1);

  const detail::PrefixKeys keys(W);
  // state bit j-1 = membership of n - j
  std::vector<__int128> cur(states * W, 0), nxt(states * W, 0);
  std::vector<char> live(states, 0), nlive(states, 0);
  std::vector<std::uint32_t> parent(W * states, 0);
  live[0] = 1;
  for (std::size_t n = 0; n < W; ++n) {
    std::fill(nlive.begin(), nlive.end(), 0);
    bool tail_ok = true;
    for (auto delta : d.distances())
      if (n + delta >= W && s.contains(n + delta)) tail_ok = false;
    std::vector<__int128> scratch(W);
    for (std::uint32_t st = 0; st < states; ++st) {
      if (!live[st]) continue;
      const __int128* key = &cur[st * W];
      for (std::uint32_t b = 0; b < 2; ++b) {
        if (b == 1 && (!tail_ok || (st & forbid))) continue;
        std::copy(key, key + W, scratch.begin());
        if (b == 1) keys.add(n, scratch.data());
        const std::uint32_t ns = ((st << 1) | b) & mask;
        __int128* slot = &nxt[ns * W];
        if (!nlive[ns] || keys.less(slot, scratch.data())) {
          std::copy(scratch.begin(), scratch.end(), slot);
          nlive[ns] = 1;
          parent[n * states + ns] = (st << 1) | b;
        }
      }
    }
    std::swap(cur, nxt);
    std::swap(live, nlive);
  }
  std::uint32_t best = 0;
  bool found = false;
  for (std::uint32_t st = 0; st < states; ++st) {
    if (!live[st]) continue;
    if (!found || keys.less(&cur[best * W], &cur[st * W])) best = st;
    found = true;
  }
  if (!found) throw std::logic_error("no admissible prefix");
  Bits prefix(W, 0);
  std::uint32_t st = best;
  for (std::size_t n = W; n-- > 0;) {
    const std::uint32_t link = parent[n * states + st];
    prefix[n] = static_cast<std::uint8_t>(link & 1u);
    st = link >> 1;
  }
  const std::size_t N = std::max(W, s.preperiod_length());
  const RationalSet out = RationalSet::from_predicate(
      [&](std::size_t n) { return n < W ? prefix[n] != 0 : s.contains(n); }, N, s.period());
  if (germ_compare(out, s).relation == Relation::Less) throw std::logic_error("prefix search lost germ");
  return out;
}

}  // namespace germ
