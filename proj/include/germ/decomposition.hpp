#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "germ/circular_word.hpp"
#include "germ/error.hpp"
#include "germ/germ_order.hpp"
#include "germ/letters.hpp"

namespace germ {

/// w = prefix : c_1 : c_2 : ..., split at every occurrence of the anchor.
/// The factor sequence is `transient` followed by `period` repeated forever.
struct Decomposition {
  unsigned m = 1;
  Letter anchor;
  std::vector<Letter> prefix;
  std::vector<CircularWord> transient;
  std::vector<CircularWord> period;

  std::size_t transient_count() const { return transient.size(); }

  /// k-th factor of the infinite sequence.
  const CircularWord& factor(std::size_t k) const {
    if (k < transient.size()) return transient[k];
    return period[(k - transient.size()) % period.size()];
  }

  /// Reassemble prefix : c_1 : c_2 : ... as a letter word.
  LetterWord to_word() const {
    LetterWord w;
    w.m = m;
    w.pre = prefix;
    for (const auto& c : transient) w.pre.insert(w.pre.end(), c.letters().begin(), c.letters().end() - 1);
    for (const auto& c : period) w.rep.insert(w.rep.end(), c.letters().begin(), c.letters().end() - 1);
    return w;
  }
};

/// Least letter (tuple order) occurring in the repetend.
inline Letter default_anchor(const LetterWord& w) {
  if (w.rep.empty()) throw PreconditionError("letter word with empty repetend");
  return *std::min_element(w.rep.begin(), w.rep.end(), lex_less);
}

inline Decomposition decompose(const LetterWord& w, Letter anchor) {
  if (std::find(w.rep.begin(), w.rep.end(), anchor) == w.rep.end())
    throw PreconditionError("anchor letter " + anchor.to_string(w.m) + " does not recur in the word");
  Decomposition out;
  out.m = w.m;
  out.anchor = anchor;
  const std::size_t N = w.pre.size(), p = w.rep.size();
  std::size_t first = 0;
  while (w.at(first) != anchor) ++first;
  std::size_t i0 = 0;
  while (w.rep[i0] != anchor) ++i0;
  const std::size_t periodic_start = N + i0;

  out.prefix.assign(w.pre.begin(), w.pre.begin() + static_cast<std::ptrdiff_t>(std::min(first, N)));
  for (std::size_t n = N; n < first; ++n) out.prefix.push_back(w.at(n));

  auto factor_from = [&](std::size_t start) {
    std::vector<Letter> letters{w.at(start)};
    std::size_t n = start + 1;
    while (w.at(n) != anchor) letters.push_back(w.at(n++));
    letters.push_back(anchor);
    return std::pair{CircularWord(w.m, std::move(letters)), n};
  };
  std::size_t pos = first;
  while (pos < periodic_start) {
    auto [c, next] = factor_from(pos);
    out.transient.push_back(std::move(c));
    pos = next;
  }
  while (pos < periodic_start + p) {
    auto [c, next] = factor_from(pos);
    out.period.push_back(std::move(c));
    pos = next;
  }
  return out;
}

inline Decomposition decompose(const LetterWord& w) { return decompose(w, default_anchor(w)); }

namespace detail {

inline Relation germ_relation(const RationalFunction& f, const RationalFunction& g) {
  return relation_from_sign(sign_near_one(f - g));
}

}  // namespace detail

/// For c <= c' sharing an anchor, checks c <= c:c' <= c':c <= c' by exact
/// rational-function comparisons, and the strict chain when c < c'.
inline bool lemma5_check(const CircularWord& c, const CircularWord& cp) {
  if (c.anchor() != cp.anchor()) throw PreconditionError("lemma5_check needs a shared anchor");
  const auto gc = circ_germ(c), gcp = circ_germ(cp);
  const Relation base = detail::germ_relation(gc, gcp);
  if (base == Relation::Greater) throw PreconditionError("lemma5_check needs c <= c'");
  const auto g1 = circ_germ(circ_concat(c, cp));
  const auto g2 = circ_germ(circ_concat(cp, c));
  const Relation r1 = detail::germ_relation(gc, g1);
  const Relation r2 = detail::germ_relation(g1, g2);
  const Relation r3 = detail::germ_relation(g2, gcp);
  if (base == Relation::Less) return r1 == Relation::Less && r2 == Relation::Less && r3 == Relation::Less;
  return r1 != Relation::Greater && r2 != Relation::Greater && r3 != Relation::Greater;
}

struct SwapCertificate {
  /// Factors `index` and `index + 1` (0-based, after the prefix) are out of order.
  std::size_t index = 0;
  /// The word with those two factors exchanged; strictly larger in germ order.
  LetterWord improved;
};

struct Lemma6Result {
  bool nonincreasing = true;
  std::optional<SwapCertificate> swap;
  Decomposition decomposition;
};

/// Checks c_1 >= c_2 >= ... over the transient factors plus one period
/// (including the wrap back to the start of the period).
inline Lemma6Result lemma6_check(const LetterWord& w, Letter anchor) {
  Lemma6Result out;
  out.decomposition = decompose(w, anchor);
  const auto& dec = out.decomposition;
  const std::size_t T = dec.transient.size(), P = dec.period.size();
  for (std::size_t k = 0; k < T + P; ++k) {
    if (circ_compare(dec.factor(k), dec.factor(k + 1)) != Relation::Less) continue;
    out.nonincreasing = false;
    SwapCertificate cert;
    cert.index = k;
    LetterWord& v = cert.improved;
    v.m = w.m;
    v.pre = dec.prefix;
    auto append = [&](const CircularWord& c) { v.pre.insert(v.pre.end(), c.letters().begin(), c.letters().end() - 1); };
    for (std::size_t j = 0; j < k; ++j) append(dec.factor(j));
    append(dec.factor(k + 1));
    append(dec.factor(k));
    const std::size_t resume = std::max(k + 2, T);
    for (std::size_t j = k + 2; j < resume; ++j) append(dec.factor(j));
    for (std::size_t j = 0; j < P; ++j) {
      const auto& c = dec.factor(resume + j);
      v.rep.insert(v.rep.end(), c.letters().begin(), c.letters().end() - 1);
    }
    if (germ_compare(block_decode(v), block_decode(w)).relation != Relation::Greater)
      throw std::logic_error("factor swap failed to increase the germ");
    out.swap = std::move(cert);
    return out;
  }
  return out;
}

inline Lemma6Result lemma6_check(const LetterWord& w) { return lemma6_check(w, default_anchor(w)); }

}  // namespace germ
