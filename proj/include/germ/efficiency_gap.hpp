#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "germ/distance_set.hpp"
#include "germ/error.hpp"
#include "germ/germ_order.hpp"
#include "germ/rational_set.hpp"
#include "germ/sampling.hpp"

namespace germ {

struct GapReport {
  unsigned k = 0;
  Valuation star{Rational(0), Rational(0)};
  /// nu(S*) lowered by 1/k in the constant term.
  Valuation bound{Rational(0), Rational(0)};
  std::size_t samples = 0;
  std::size_t equalities = 0;
  std::vector<RationalSet> violations;
};

/// Against S* = kN, every other {1..k-1}-avoiding rational set S must have
/// nu(S) <= (1/k, (k-1)/(2k) - 1/k) lexicographically.
inline Relation gap_relation(const RationalSet& s, unsigned k) {
  const Rational inv = ratio(1, k);
  return compare(valuation(s), Valuation(inv, ratio(static_cast<long>(k) - 1, 2 * static_cast<long>(k)) - inv));
}

inline GapReport theorem8_gap(unsigned k, std::size_t sample_size, std::uint64_t seed) {
  if (k < 2) throw PreconditionError("k must be >= 2");
  const RationalSet star = RationalSet::progression(0, k);
  const DistanceSet d = DistanceSet::below(k);
  GapReport r;
  r.k = k;
  r.star = valuation(star);
  r.bound = Valuation(r.star.density(), r.star.constant() - ratio(1, k));
  Rng rng(seed);
  while (r.samples < sample_size) {
    const RationalSet s = random_avoiding_set(rng, d, 3 * k, 3 * k, 0.8);
    if (s == star) continue;
    ++r.samples;
    const Relation rel = compare(valuation(s), r.bound);
    if (rel == Relation::Greater) r.violations.push_back(s);
    else if (rel == Relation::Equal) ++r.equalities;
  }
  return r;
}

}  // namespace germ
