#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "germ/distance_set.hpp"
#include "germ/error.hpp"
#include "germ/germ_order.hpp"
#include "germ/letters.hpp"
#include "germ/polynomial.hpp"
#include "germ/rational_function.hpp"

namespace germ {

/// A letter word whose first and last letters coincide. Its length counts the
/// shared end letter once, so (a, b, c, a) has length 3.
class CircularWord {
 public:
  CircularWord(unsigned m, std::vector<Letter> letters) : m_(m), letters_(std::move(letters)) {
    if (letters_.size() < 2) throw PreconditionError("circular word needs length >= 1");
    if (letters_.front() != letters_.back()) throw PreconditionError("circular word must end with its first letter");
  }

  /// Circular word over the 1-block code: each letter is a single membership
  /// bit, so any 0/1 pattern of length a is a circular word of length a.
  static CircularWord from_pattern(std::span<const std::uint8_t> pattern) {
    if (pattern.empty()) throw PreconditionError("empty pattern");
    std::vector<Letter> v;
    for (auto b : pattern) v.push_back(Letter{b ? 1u : 0u});
    v.push_back(v.front());
    return CircularWord(1, std::move(v));
  }
  static CircularWord from_pattern(std::initializer_list<std::uint8_t> pattern) {
    const std::vector<std::uint8_t> v(pattern);
    return from_pattern(std::span<const std::uint8_t>(v));
  }

  unsigned block_length() const { return m_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size() - 1; }
  Letter anchor() const { return letters_.front(); }

  /// Consonant flags of the first `length()` letters.
  std::vector<std::uint8_t> pattern() const {
    std::vector<std::uint8_t> p(length());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = letters_[i].consonant() ? 1 : 0;
    return p;
  }

  /// P_c: 0/1 polynomial of degree < length.
  Polynomial generating_polynomial() const {
    const auto p = pattern();
    return Polynomial::from_bits(p);
  }

  bool is_consistent() const {
    for (std::size_t i = 1; i < letters_.size(); ++i)
      if (!is_successor(letters_[i - 1], letters_[i], m_)) return false;
    return true;
  }

  bool is_legal(const DistanceSet& d) const {
    if (d.block_length() != m_) return false;
    for (auto a : letters_)
      if (!germ::is_legal(a, d)) return false;
    return true;
  }

  /// The anchor occurs only at the two ends.
  bool is_primitive() const {
    for (std::size_t i = 1; i + 1 < letters_.size(); ++i)
      if (letters_[i] == anchor()) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) s += ' ';
      s += letters_[i].to_string(m_);
    }
    return s;
  }

  friend bool operator==(const CircularWord&, const CircularWord&) = default;

 private:
  unsigned m_;
  std::vector<Letter> letters_;
};

/// c:c' of length a + a'; the last letter of c is identified with the first of c'.
inline CircularWord circ_concat(const CircularWord& c, const CircularWord& cp) {
  if (c.block_length() != cp.block_length()) throw PreconditionError("circular words over different block lengths");
  if (c.letters().back() != cp.letters().front())
    throw PreconditionError("anchor mismatch: last letter of c differs from first letter of c'");
  std::vector<Letter> v = c.letters();
  v.insert(v.end(), cp.letters().begin() + 1, cp.letters().end());
  return CircularWord(c.block_length(), std::move(v));
}

/// |c| = P_c / (1 - q^a), the generating function of c:c:c:...
inline RationalFunction circ_germ(const CircularWord& c) {
  return {c.generating_polynomial(), Polynomial::one_minus_q_pow(c.length())};
}

/// Germ order of |c| against |c'|.
inline Relation circ_compare(const CircularWord& c, const CircularWord& cp) {
  // |c| - |c'| has the sign of P (1 - q^a') - P' (1 - q^a) near 1.
  const auto p = c.pattern(), pp = cp.pattern();
  const std::size_t a = p.size(), ap = pp.size();
  std::vector<std::int64_t> diff(a + ap, 0);
  for (std::size_t i = 0; i < a; ++i)
    if (p[i]) {
      diff[i] += 1;
      diff[i + ap] -= 1;
    }
  for (std::size_t i = 0; i < ap; ++i)
    if (pp[i]) {
      diff[i] -= 1;
      diff[i + a] += 1;
    }
  return relation_from_sign(detail::order_sign_at_one(diff).sign);
}

/// The infinite word c:c:c:... as an eventually periodic letter word.
inline LetterWord periodic_word(const CircularWord& c) {
  LetterWord w;
  w.m = c.block_length();
  w.rep.assign(c.letters().begin(), c.letters().end() - 1);
  return w;
}

}  // namespace germ
