#pragma once

#include <cstdint>
#include <unordered_map>

#include "germ/distance_set.hpp"
#include "germ/rational_set.hpp"

namespace germ {

/// No two elements of S differ by an element of D. Every violating pair is a
/// translate by a multiple of the period of one whose smaller element lies
/// below N + d, so positions < N + d + max(D) decide it.
inline bool is_avoiding(const RationalSet& s, const DistanceSet& d) {
  const std::uint64_t window = s.preperiod_length() + s.period();
  for (std::uint64_t n = 0; n < window; ++n) {
    if (!s.contains(n)) continue;
    for (auto delta : d.distances())
      if (s.contains(n + delta)) return false;
  }
  return true;
}

/// n joins S iff no n - delta (delta in D) is already in S. The decision only
/// depends on the last max(D) bits, so the orbit cycles within 2^max(D) steps.
inline RationalSet greedy_avoiding(const DistanceSet& d) {
  const unsigned M = d.max();
  const std::uint32_t mask = (1u << M) - 1u;
  std::uint32_t forbid = 0;
  for (auto delta : d.distances()) forbid |= 1u << (delta - 1);
  // state bit j-1 is membership of n - j.
  std::unordered_map<std::uint32_t, std::size_t> seen;
  Bits bits;
  std::uint32_t state = 0;
  for (;;) {
    if (auto it = seen.find(state); it != seen.end()) {
      const std::size_t start = it->second;
      Bits pre(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(start));
      Bits rep(bits.begin() + static_cast<std::ptrdiff_t>(start), bits.end());
      return RationalSet(std::move(pre), std::move(rep));
    }
    seen.emplace(state, bits.size());
    const std::uint8_t b = (state & forbid) ? 0 : 1;
    bits.push_back(b);
    state = ((state << 1) | b) & mask;
  }
}

}  // namespace germ
