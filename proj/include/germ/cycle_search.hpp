#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <optional>
#include <vector>

#include "germ/circular_word.hpp"
#include "germ/distance_set.hpp"
#include "germ/error.hpp"
#include "germ/letters.hpp"
#include "germ/rational.hpp"

namespace germ {

/// Successor graph on the legal letters of D. Vertex order follows
/// legal_alphabet (lexicographic tuple order).
class LetterGraph {
 public:
  explicit LetterGraph(const DistanceSet& d) : m_(d.block_length()), letters_(legal_alphabet(d)) {
    std::vector<int> index(std::size_t{1} << m_, -1);
    for (std::size_t v = 0; v < letters_.size(); ++v) index[letters_[v].bits] = static_cast<int>(v);
    out_.resize(letters_.size());
    for (std::size_t v = 0; v < letters_.size(); ++v)
      for (std::uint32_t b = 0; b < 2; ++b) {
        const int u = index[(letters_[v].bits >> 1) | (b << (m_ - 1))];
        if (u >= 0) out_[v].push_back(static_cast<std::size_t>(u));
      }
  }

  unsigned block_length() const { return m_; }
  std::size_t size() const { return letters_.size(); }
  Letter letter(std::size_t v) const { return letters_[v]; }
  const std::vector<std::size_t>& successors(std::size_t v) const { return out_[v]; }
  /// Consonant count contributed by leaving v.
  int weight(std::size_t v) const { return letters_[v].consonant() ? 1 : 0; }

 private:
  unsigned m_;
  std::vector<Letter> letters_;
  std::vector<std::vector<std::size_t>> out_;
};

/// Maximum cycle mean of the vertex weights (Karp). This is the highest
/// density of a periodic D-avoiding set.
inline Rational max_cycle_mean(const LetterGraph& g) {
  const std::size_t n = g.size();
  constexpr long kNone = std::numeric_limits<long>::min();
  // best[k][v]: heaviest walk with k edges ending at v, from any start.
  std::vector<std::vector<long>> best(n + 1, std::vector<long>(n, kNone));
  std::fill(best[0].begin(), best[0].end(), 0);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t u = 0; u < n; ++u) {
      if (best[k - 1][u] == kNone) continue;
      for (auto v : g.successors(u)) best[k][v] = std::max(best[k][v], best[k - 1][u] + g.weight(u));
    }
  std::optional<Rational> answer;
  for (std::size_t v = 0; v < n; ++v) {
    if (best[n][v] == kNone) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (best[k][v] == kNone) continue;
      const Rational r = ratio(best[n][v] - best[k][v], static_cast<long>(n - k));
      if (!worst || r < *worst) worst = r;
    }
    if (worst && (!answer || *worst > *answer)) answer = worst;
  }
  if (!answer) throw PreconditionError("letter graph has no cycle");
  return *answer;
}

/// Highest mean among closed walks of length at most L, which equals the
/// highest mean among simple cycles of length at most L.
inline Rational max_cycle_mean_within(const LetterGraph& g, std::size_t L) {
  const std::size_t n = g.size();
  constexpr long kNone = std::numeric_limits<long>::min();
  std::optional<Rational> answer;
  std::vector<long> cur(n), nxt(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(cur.begin(), cur.end(), kNone);
    cur[s] = 0;
    for (std::size_t len = 1; len <= L; ++len) {
      std::fill(nxt.begin(), nxt.end(), kNone);
      for (std::size_t u = 0; u < n; ++u) {
        if (cur[u] == kNone) continue;
        for (auto v : g.successors(u)) nxt[v] = std::max(nxt[v], cur[u] + g.weight(u));
      }
      std::swap(cur, nxt);
      if (cur[s] != kNone) {
        const Rational r = ratio(cur[s], static_cast<long>(len));
        if (!answer || r > *answer) answer = r;
      }
    }
  }
  if (!answer) throw PreconditionError("no cycle of length <= " + std::to_string(L));
  return *answer;
}

struct SearchBudget {
  /// Cap on depth-first steps spent enumerating cycles.
  std::uint64_t max_cycle_steps = 50'000'000;
  /// Cap on position * state * window cells in the preperiod search.
  std::uint64_t max_prefix_cells = 100'000'000;
  std::size_t max_window = 100;
  /// Default period bound is min(2^max(D), this).
  std::size_t default_period_cap = 24;
};

struct PeriodicChampion {
  CircularWord word;
  Rational density;
  std::size_t cycles_enumerated = 0;
  std::size_t candidates_compared = 0;
};

/// Germ-greatest circular word over every rotation of every simple cycle of
/// length <= L in the legal-letter graph.
inline PeriodicChampion best_periodic(const DistanceSet& d, std::size_t L, const SearchBudget& budget = {}) {
  if (L < 1) throw PreconditionError("period bound must be >= 1");
  const LetterGraph g(d);
  const std::size_t n = g.size();
  const Rational global = max_cycle_mean(g);
  const Rational target = max_cycle_mean_within(g, L);

  // With the global optimum in reach, every optimal cycle runs on zero-slack
  // edges of a longest-path potential for weights w - mean.
  std::vector<std::vector<std::size_t>> edges(n);
  if (target == global) {
    const long num = global.get_num().get_si(), den = global.get_den().get_si();
    std::vector<long> pot(n, 0);
    for (std::size_t round = 0; round < n; ++round) {
      bool changed = false;
      for (std::size_t u = 0; u < n; ++u)
        for (auto v : g.successors(u)) {
          const long cand = pot[u] + g.weight(u) * den - num;
          if (cand > pot[v]) {
            pot[v] = cand;
            changed = true;
          }
        }
      if (!changed) break;
    }
    for (std::size_t u = 0; u < n; ++u)
      for (auto v : g.successors(u))
        if (pot[u] + g.weight(u) * den - num == pot[v]) edges[u].push_back(v);
  } else {
    for (std::size_t u = 0; u < n; ++u) edges[u] = g.successors(u);
  }

  std::optional<CircularWord> champion;
  PeriodicChampion report{CircularWord(1, {Letter{}, Letter{}}), target};
  std::uint64_t steps = 0;
  std::vector<std::size_t> path;
  std::vector<char> on_path(n, 0);
  const long tnum = target.get_num().get_si(), tden = target.get_den().get_si();

  auto consider = [&] {
    ++report.cycles_enumerated;
    long weight = 0;
    for (auto v : path) weight += g.weight(v);
    if (weight * tden != tnum * static_cast<long>(path.size())) return;
    for (std::size_t r = 0; r < path.size(); ++r) {
      std::vector<Letter> letters;
      for (std::size_t i = 0; i <= path.size(); ++i) letters.push_back(g.letter(path[(r + i) % path.size()]));
      CircularWord c(g.block_length(), std::move(letters));
      ++report.candidates_compared;
      if (!champion || circ_compare(c, *champion) == Relation::Greater) champion = std::move(c);
    }
  };

  // Each simple cycle is found once, from its least vertex.
  auto dfs = [&](auto&& self, std::size_t start, std::size_t u) -> void {
    if (++steps > budget.max_cycle_steps) throw BudgetError("cycle enumeration exceeded its step budget");
    for (auto v : edges[u]) {
      if (v == start) {
        consider();
      } else if (v > start && !on_path[v] && path.size() < L) {
        path.push_back(v);
        on_path[v] = 1;
        self(self, start, v);
        on_path[v] = 0;
        path.pop_back();
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
  if (!champion) throw std::logic_error("no cycle attains the bounded maximum mean");
  report.word = std::move(*champion);
  return report;
}

}  // namespace germ
