#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "germ/avoidance.hpp"
#include "germ/distance_set.hpp"
#include "germ/error.hpp"
#include "germ/germ_order.hpp"
#include "germ/rational_function.hpp"
#include "germ/rational_set.hpp"

namespace germ {

/// Finite nonempty B subset of N, translated so that min(B) = 0.
class PackingBody {
 public:
  explicit PackingBody(std::vector<std::uint64_t> elements) : b_(std::move(elements)) {
    if (b_.empty()) throw PreconditionError("packing body must be nonempty");
    std::sort(b_.begin(), b_.end());
    b_.erase(std::unique(b_.begin(), b_.end()), b_.end());
    const auto lo = b_.front();
    for (auto& x : b_) x -= lo;
  }
  PackingBody(std::initializer_list<std::uint64_t> elements) : PackingBody(std::vector<std::uint64_t>(elements)) {}

  const std::vector<std::uint64_t>& elements() const { return b_; }
  std::uint64_t span() const { return b_.back(); }
  RationalSet as_set() const { return RationalSet::finite(std::span<const std::uint64_t>(b_)); }

 private:
  std::vector<std::uint64_t> b_;
};

/// Positive elements of B - B; empty (no constraint) for a single point.
inline std::optional<DistanceSet> diff_set(const PackingBody& b) {
  std::set<std::uint64_t> diffs;
  const auto& e = b.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) diffs.insert(e[i] - e[j]);
  if (diffs.empty()) return std::nullopt;
  std::vector<std::uint32_t> d;
  for (auto x : diffs) {
    if (x >= kMaxBlockLength) throw BudgetError("packing body span exceeds the supported block length");
    d.push_back(static_cast<std::uint32_t>(x));
  }
  return DistanceSet(std::move(d));
}

/// Union of the translates B + n, n in T (with multiplicity ignored).
inline RationalSet translate_union(const RationalSet& t, const PackingBody& b) {
  const std::size_t N = t.preperiod_length() + b.span();
  return RationalSet::from_predicate(
      [&](std::uint64_t x) {
        for (auto e : b.elements())
          if (e <= x && t.contains(x - e)) return true;
        return false;
      },
      N, t.period());
}

/// Translates B + n (n in T) are pairwise disjoint. Decided both as D_B-avoidance
/// of T and by counting coverage multiplicities; the two must agree.
inline bool is_translation_set(const RationalSet& t, const PackingBody& b) {
  const auto d = diff_set(b);
  const bool by_differences = d ? is_avoiding(t, *d) : true;

  bool by_coverage = true;
  const std::uint64_t window = t.preperiod_length() + 2 * t.period() + 2 * b.span();
  for (std::uint64_t x = 0; x < window && by_coverage; ++x) {
    int covered = 0;
    for (auto e : b.elements())
      if (e <= x && t.contains(x - e)) ++covered;
    by_coverage = covered <= 1;
  }
  if (by_differences != by_coverage) throw std::logic_error("translation-set characterizations disagree");
  return by_differences;
}

/// Generating function of the union of translates: gf(T) * gf(B), checked
/// against the union computed pointwise.
inline RationalFunction union_gf(const RationalSet& t, const PackingBody& b) {
  if (!is_translation_set(t, b)) throw PreconditionError("translates of B overlap along T");
  const RationalFunction product = gf_of_set(t) * gf_of_set(b.as_set());
  if (!(product == gf_of_set(translate_union(t, b)))) throw std::logic_error("union generating function mismatch");
  return product;
}

}  // namespace germ
