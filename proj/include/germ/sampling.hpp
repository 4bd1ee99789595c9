#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "germ/avoidance.hpp"
#include "germ/circular_word.hpp"
#include "germ/distance_set.hpp"
#include "germ/domination.hpp"
#include "germ/error.hpp"
#include "germ/letters.hpp"
#include "germ/rational_set.hpp"

namespace germ {

using Rng = std::mt19937_64;

namespace detail {

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace detail

/// Uniform preperiod length in [0, max_pre], period in [1, max_period], fair bits.
inline RationalSet random_rational_set(Rng& rng, std::size_t max_pre, std::size_t max_period) {
  const std::size_t N = detail::uniform(rng, 0, max_pre), d = detail::uniform(rng, 1, max_period);
  Bits pre(N), rep(d);
  for (auto& b : pre) b = static_cast<std::uint8_t>(rng() & 1);
  for (auto& b : rep) b = static_cast<std::uint8_t>(rng() & 1);
  return RationalSet(std::move(pre), std::move(rep));
}

/// D-avoiding rational set: bits are chosen left to right, a free position
/// taking 1 with probability `density_bias`, and candidates whose periodic
/// wrap breaks avoidance are rejected.
inline RationalSet random_avoiding_set(Rng& rng, const DistanceSet& d, std::size_t max_pre, std::size_t max_period,
                                       double density_bias = 0.6) {
  std::bernoulli_distribution coin(density_bias);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const std::size_t N = detail::uniform(rng, 0, max_pre), p = detail::uniform(rng, 1, max_period);
    Bits bits(N + p, 0);
    for (std::size_t n = 0; n < bits.size(); ++n) {
      bool free = true;
      for (auto delta : d.distances())
        if (delta <= n && bits[n - delta]) free = false;
      bits[n] = free && coin(rng) ? 1 : 0;
    }
    RationalSet s(Bits(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(N)),
                  Bits(bits.begin() + static_cast<std::ptrdiff_t>(N), bits.end()));
    if (is_avoiding(s, d)) return s;
  }
  throw BudgetError("could not sample an avoiding set");
}

/// Two D-legal circular words on a shared random anchor, ordered so that the
/// first is germ-below the second.
inline std::pair<CircularWord, CircularWord> random_ordered_pair(Rng& rng, const DistanceSet& d,
                                                                 std::size_t max_length) {
  const auto alphabet = legal_alphabet(d);
  for (;;) {
    const Letter alpha = alphabet[detail::uniform(rng, 0, alphabet.size() - 1)];
    const auto words = enumerate_circular_words(d, alpha, max_length);
    if (words.empty()) continue;
    const auto& a = words[detail::uniform(rng, 0, words.size() - 1)];
    const auto& b = words[detail::uniform(rng, 0, words.size() - 1)];
    if (circ_compare(a, b) == Relation::Greater) return {b, a};
    return {a, b};
  }
}

}  // namespace germ
