#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>

#include "germ/avoidance.hpp"
#include "germ/cycle_search.hpp"
#include "germ/decomposition.hpp"
#include "germ/distance_set.hpp"
#include "germ/error.hpp"
#include "germ/letters.hpp"
#include "germ/packing.hpp"
#include "germ/preperiod.hpp"
#include "germ/rational_set.hpp"

namespace germ {

/// Outcome of a bounded search for a germ-maximal D-avoiding set. The champion
/// is optimal only among the candidates the bounds admit; `caveat` is always
/// set because global maximality is not established.
struct SearchReport {
  RationalSet champion;
  RationalSet periodic_champion;
  Rational density;
  std::size_t period_bound = 0;
  std::size_t preperiod_window = 0;
  std::size_t cycles_enumerated = 0;
  std::size_t candidates_compared = 0;
  bool lemma6_pass = false;
  bool caveat = true;
};

inline std::size_t default_period_bound(const DistanceSet& d, const SearchBudget& budget = {}) {
  const std::size_t full = d.max() >= 63 ? budget.default_period_cap : (std::size_t{1} << d.max());
  return std::min(full, budget.default_period_cap);
}

inline std::size_t default_preperiod_window(const DistanceSet& d) { return 4 * static_cast<std::size_t>(d.max()); }

inline SearchReport optimize(const DistanceSet& d, std::optional<std::size_t> period_bound = std::nullopt,
                             std::optional<std::size_t> window = std::nullopt, const SearchBudget& budget = {}) {
  SearchReport r;
  r.period_bound = period_bound.value_or(default_period_bound(d, budget));
  r.preperiod_window = window.value_or(default_preperiod_window(d));
  if (r.period_bound < 1 || r.preperiod_window < 1) throw PreconditionError("L and W must be >= 1");

  const auto periodic = best_periodic(d, r.period_bound, budget);
  r.cycles_enumerated = periodic.cycles_enumerated;
  r.candidates_compared = periodic.candidates_compared;
  r.density = periodic.density;
  r.periodic_champion = block_decode(periodic_word(periodic.word));
  r.champion = improve_preperiod(r.periodic_champion, d, r.preperiod_window, budget);
  r.lemma6_pass = is_avoiding(r.champion, d) && lemma6_check(block_encode(r.champion, d)).nonincreasing;
  return r;
}

/// No forbidden distances: every set is admissible and N is the maximum.
inline SearchReport optimize_unconstrained() {
  SearchReport r;
  r.champion = r.periodic_champion = RationalSet::naturals();
  r.density = 1;
  r.lemma6_pass = true;
  return r;
}

struct PackingReport {
  std::optional<DistanceSet> distances;
  SearchReport search;
  RationalSet covered;
  RationalFunction covered_gf;
};

/// Densest packing of N by translates of B, through the D_B-avoidance problem.
inline PackingReport optimize_packing(const PackingBody& b, std::optional<std::size_t> period_bound = std::nullopt,
                                      std::optional<std::size_t> window = std::nullopt,
                                      const SearchBudget& budget = {}) {
  PackingReport r;
  r.distances = diff_set(b);
  r.search = r.distances ? optimize(*r.distances, period_bound, window, budget) : optimize_unconstrained();
  r.covered = translate_union(r.search.champion, b);
  r.covered_gf = union_gf(r.search.champion, b);
  return r;
}

}  // namespace germ
