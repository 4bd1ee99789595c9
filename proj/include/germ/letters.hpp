#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "germ/distance_set.hpp"
#include "germ/error.hpp"
#include "germ/rational_set.hpp"

namespace germ {

/// One m-bit window (b_1, ..., b_m) of an indicator sequence. Bit i of the mask
/// holds b_{i+1}, i.e. the membership of position n + i for the letter w_n.
struct Letter {
  std::uint32_t bits = 0;

  bool consonant() const { return (bits & 1u) != 0; }
  bool bit(unsigned i) const { return ((bits >> i) & 1u) != 0; }

  std::string to_string(unsigned m) const {
    std::string s;
    for (unsigned i = 0; i < m; ++i) s.push_back(bit(i) ? '1' : '0');
    return s;
  }

  friend bool operator==(Letter, Letter) = default;
  /// Mask order; use lex_less for the tuple order.
  friend bool operator<(Letter a, Letter b) { return a.bits < b.bits; }
};

/// Lexicographic order of the tuples (b_1, ..., b_m).
inline bool lex_less(Letter a, Letter b) {
  const std::uint32_t diff = a.bits ^ b.bits;
  if (diff == 0) return false;
  const std::uint32_t lowest = diff & (~diff + 1);
  return (a.bits & lowest) == 0;
}

inline std::uint32_t low_mask(unsigned m) { return m >= 32 ? ~0u : ((1u << m) - 1u); }

/// b'_i = b_{i+1} for 1 <= i <= m - 1.
inline bool is_successor(Letter from, Letter to, unsigned m) {
  return (to.bits & low_mask(m - 1)) == (from.bits >> 1);
}

inline bool is_legal(Letter a, const DistanceSet& d) {
  for (std::uint32_t x = a.bits; x; x &= x - 1) {
    const unsigned i = static_cast<unsigned>(__builtin_ctz(x));
    for (auto delta : d.distances())
      if (a.bit(i + delta)) return false;
  }
  return true;
}

/// All legal letters for D, in lexicographic tuple order.
inline std::vector<Letter> legal_alphabet(const DistanceSet& d) {
  const unsigned m = d.block_length();
  std::vector<Letter> out;
  for (std::uint32_t bits = 0; bits < (1u << m); ++bits)
    if (is_legal(Letter{bits}, d)) out.push_back(Letter{bits});
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

/// Eventually periodic letter word: `pre` followed by `rep` repeated forever.
struct LetterWord {
  unsigned m = 1;
  std::vector<Letter> pre;
  std::vector<Letter> rep;

  Letter at(std::size_t n) const {
    if (rep.empty()) throw PreconditionError("letter word with empty repetend");
    if (n < pre.size()) return pre[n];
    return rep[(n - pre.size()) % rep.size()];
  }

  /// Every consecutive pair (including the wrap of the repetend) satisfies
  /// the successor relation.
  bool is_consistent() const {
    if (rep.empty()) return false;
    const std::size_t horizon = pre.size() + rep.size() + 1;
    for (std::size_t n = 1; n < horizon; ++n)
      if (!is_successor(at(n - 1), at(n), m)) return false;
    return true;
  }

  bool is_legal(const DistanceSet& d) const {
    if (d.block_length() != m) return false;
    for (auto a : pre)
      if (!germ::is_legal(a, d)) return false;
    for (auto a : rep)
      if (!germ::is_legal(a, d)) return false;
    return true;
  }

  friend bool operator==(const LetterWord&, const LetterWord&) = default;
};

/// m-block encoding w_n = (b_n, ..., b_{n+m-1}).
inline LetterWord block_encode(const RationalSet& s, unsigned m) {
  if (m == 0 || m > kMaxBlockLength) throw PreconditionError("unsupported block length");
  auto letter_at = [&](std::size_t n) {
    std::uint32_t bits = 0;
    for (unsigned i = 0; i < m; ++i)
      if (s.contains(n + i)) bits |= 1u << i;
    return Letter{bits};
  };
  LetterWord w;
  w.m = m;
  const std::size_t N = s.preperiod_length(), d = s.period();
  for (std::size_t n = 0; n < N; ++n) w.pre.push_back(letter_at(n));
  for (std::size_t n = N; n < N + d; ++n) w.rep.push_back(letter_at(n));
  return w;
}

inline LetterWord block_encode(const RationalSet& s, const DistanceSet& d) { return block_encode(s, d.block_length()); }

/// Consonant positions of a letter word.
inline RationalSet block_decode(const LetterWord& w) {
  if (!w.is_consistent()) throw PreconditionError("letter word violates the successor relation");
  Bits pre, rep;
  for (auto a : w.pre) pre.push_back(a.consonant() ? 1 : 0);
  for (auto a : w.rep) rep.push_back(a.consonant() ? 1 : 0);
  return RationalSet(std::move(pre), std::move(rep));
}

}  // namespace germ
