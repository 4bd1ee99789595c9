#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "germ/circular_word.hpp"
#include "germ/distance_set.hpp"
#include "germ/error.hpp"
#include "germ/germ_order.hpp"
#include "germ/letters.hpp"

namespace germ {

/// For each letter alpha, a circular word c*_alpha starting with alpha that is
/// claimed to dominate every circular word starting with alpha.
using StarTable = std::map<Letter, CircularWord>;

/// Every D-legal circular word starting (and ending) with `anchor` of length
/// at most `max_length`, in depth-first order.
inline std::vector<CircularWord> enumerate_circular_words(const DistanceSet& d, Letter anchor, std::size_t max_length) {
  const unsigned m = d.block_length();
  std::vector<CircularWord> out;
  if (!is_legal(anchor, d)) return out;
  std::vector<Letter> path{anchor};
  std::function<void()> walk = [&] {
    const Letter last = path.back();
    for (std::uint32_t b = 0; b < 2; ++b) {
      const Letter next{(last.bits >> 1) | (b << (m - 1))};
      if (!is_legal(next, d)) continue;
      path.push_back(next);
      if (next == anchor) out.emplace_back(m, path);
      if (path.size() - 1 < max_length) walk();
      path.pop_back();
    }
  };
  walk();
  return out;
}

/// Germ-greatest circular word per legal letter among words of length at most
/// `max_length`. Letters with no return within the bound are omitted.
inline StarTable build_star_table(const DistanceSet& d, std::size_t max_length) {
  StarTable table;
  for (auto alpha : legal_alphabet(d)) {
    auto words = enumerate_circular_words(d, alpha, max_length);
    if (words.empty()) continue;
    std::size_t best = 0;
    for (std::size_t i = 1; i < words.size(); ++i)
      if (circ_compare(words[i], words[best]) == Relation::Greater) best = i;
    table.emplace(alpha, words[best]);
  }
  return table;
}

/// Checks each entry starts with its key, is D-legal, and dominates every
/// circular word on its letter up to `max_length`. Returns the first failure.
inline std::optional<std::string> validate_star_table(const DistanceSet& d, const StarTable& table,
                                                      std::size_t max_length) {
  const unsigned m = d.block_length();
  for (const auto& [alpha, star] : table) {
    const std::string name = alpha.to_string(m);
    if (star.anchor() != alpha) return "entry for " + name + " does not start with " + name;
    if (!star.is_legal(d) || !star.is_consistent()) return "entry for " + name + " is not a D-legal circular word";
    for (const auto& c : enumerate_circular_words(d, alpha, max_length))
      if (circ_compare(star, c) == Relation::Less) return "entry for " + name + " is beaten by " + c.to_string();
  }
  return std::nullopt;
}

struct Domination {
  LetterWord word;
  /// Pre-repetend length after each rewriting step, starting with the input's
  /// length once the tail has been replaced.
  std::vector<std::size_t> pre_lengths;
};

namespace detail {

inline Polynomial word_polynomial(const std::vector<Letter>& letters, std::size_t from, std::size_t to) {
  std::vector<Rational> v(to - from);
  for (std::size_t i = from; i < to; ++i)
    if (letters[i].consonant()) v[i - from] = 1;
  return Polynomial(std::move(v));
}

inline RationalFunction q_pow(std::size_t n) { return RationalFunction(Polynomial::monomial(n)); }

/// Replace the repetend by a star word on one of its letters. Every letter of
/// the repetend whose star word dominates the matching rotation qualifies;
/// the germ-greatest of those wins, ties going to the earliest rotation.
inline void replace_tail(LetterWord& w, const StarTable& table) {
  const std::size_t p = w.rep.size();
  std::optional<std::size_t> best;
  std::vector<Letter> best_tail;
  for (std::size_t i = 0; i < p; ++i) {
    const Letter alpha = w.rep[i];
    const auto it = table.find(alpha);
    if (it == table.end()) continue;
    std::vector<Letter> rotated(w.rep.begin() + static_cast<std::ptrdiff_t>(i), w.rep.end());
    rotated.insert(rotated.end(), w.rep.begin(), w.rep.begin() + static_cast<std::ptrdiff_t>(i));
    rotated.push_back(alpha);
    const CircularWord r(w.m, std::move(rotated));
    const Relation rel = circ_compare(it->second, r);
    if (rel == Relation::Less) continue;
    const CircularWord& tail = rel == Relation::Greater ? it->second : r;
    if (best) {
      std::vector<Letter> cur = best_tail;
      cur.push_back(cur.front());
      if (circ_compare(tail, CircularWord(w.m, std::move(cur))) != Relation::Greater) continue;
    }
    best = i;
    best_tail.assign(tail.letters().begin(), tail.letters().end() - 1);
  }
  if (!best) throw PreconditionError("star table has no entry on a repetend letter that dominates the repetend");
  w.pre.insert(w.pre.end(), w.rep.begin(), w.rep.begin() + static_cast<std::ptrdiff_t>(*best));
  w.rep = std::move(best_tail);
}

}  // namespace detail

/// Rewrites a D-legal eventually periodic word into one that dominates it, has
/// a star word as repetend and a pre-repetend without repeated letters.
inline Domination dominate_word(const LetterWord& w, const DistanceSet& d, const StarTable& table,
                                std::size_t validation_bound) {
  if (!w.is_consistent() || !w.is_legal(d)) throw PreconditionError("input word is not D-legal");
  if (auto bad = validate_star_table(d, table, validation_bound)) throw PreconditionError("invalid star table: " + *bad);

  const RationalSet original = block_decode(w);
  Domination out;
  LetterWord cur = w;
  detail::replace_tail(cur, table);
  RationalSet cur_set = block_decode(cur);
  if (germ_compare(cur_set, original).relation == Relation::Less)
    throw std::logic_error("tail replacement decreased the germ");
  out.pre_lengths.push_back(cur.pre.size());

  for (;;) {
    // First letter whose second occurrence comes earliest.
    std::optional<std::pair<std::size_t, std::size_t>> rep;
    std::map<Letter, std::size_t> first_seen;
    for (std::size_t j = 0; j < cur.pre.size() && !rep; ++j) {
      auto [it, inserted] = first_seen.emplace(cur.pre[j], j);
      if (!inserted) rep = std::pair{it->second, j};
    }
    if (!rep) break;
    const auto [i, j] = *rep;
    const auto& pre = cur.pre;
    // w* = d : e : f : c : c : ... with e, f both starting with the repeated letter.
    std::vector<Letter> star_letters = cur.rep;
    star_letters.push_back(cur.rep.front());
    const CircularWord star(cur.m, star_letters);
    const RationalFunction P(star.generating_polynomial());
    const RationalFunction A = detail::q_pow(star.length());
    const RationalFunction R(detail::word_polynomial(pre, i, j));
    const RationalFunction C = detail::q_pow(j - i);
    const RationalFunction S(detail::word_polynomial(pre, j, pre.size()));
    const RationalFunction Dq = detail::q_pow(pre.size() - j);
    const RationalFunction one = RationalFunction::constant(1);
    const RationalFunction threshold = (one - C) * (S + Dq * P / (one - A));

    LetterWord next;
    next.m = cur.m;
    if (detail::germ_relation(R, threshold) != Relation::Greater) {
      // Removing e does not shrink the germ.
      next.pre.assign(pre.begin(), pre.begin() + static_cast<std::ptrdiff_t>(i));
      next.pre.insert(next.pre.end(), pre.begin() + static_cast<std::ptrdiff_t>(j), pre.end());
      next.rep = cur.rep;
    } else {
      // e : e : e : ... beats f : c : c : ...
      next.pre.assign(pre.begin(), pre.begin() + static_cast<std::ptrdiff_t>(i));
      next.rep.assign(pre.begin() + static_cast<std::ptrdiff_t>(i), pre.begin() + static_cast<std::ptrdiff_t>(j));
      detail::replace_tail(next, table);
    }
    const RationalSet next_set = block_decode(next);
    if (germ_compare(next_set, cur_set).relation == Relation::Less)
      throw std::logic_error("domination step decreased the germ");
    if (next.pre.size() >= cur.pre.size()) throw std::logic_error("domination step did not shorten the pre-repetend");
    cur = std::move(next);
    cur_set = next_set;
    out.pre_lengths.push_back(cur.pre.size());
  }
  if (germ_compare(cur_set, original).relation == Relation::Less)
    throw std::logic_error("dominating word is smaller than the input");
  out.word = std::move(cur);
  return out;
}

}  // namespace germ
