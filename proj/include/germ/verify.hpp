#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "germ/avoidance.hpp"
#include "germ/cycle_search.hpp"
#include "germ/decomposition.hpp"
#include "germ/domination.hpp"
#include "germ/efficiency_gap.hpp"
#include "germ/error.hpp"
#include "germ/germ_order.hpp"
#include "germ/letters.hpp"
#include "germ/oracles.hpp"
#include "germ/sampling.hpp"

namespace germ {

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

namespace detail {

/// Random nonempty D with max(D) <= max_d.
inline DistanceSet random_distance_set(Rng& rng, unsigned max_d) {
  std::vector<std::uint32_t> v;
  while (v.empty())
    for (std::uint32_t x = 1; x <= max_d; ++x)
      if (rng() & 1) v.push_back(x);
  return DistanceSet(std::move(v));
}

template <class F>
void run_trials(SuiteResult& r, std::size_t trials, F&& trial) {
  for (std::size_t i = 0; i < trials; ++i) {
    ++r.trials;
    try {
      if (auto msg = trial(); !msg.empty()) r.failures.push_back(msg);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
  }
}

}  // namespace detail

inline SuiteResult verify_lemma5(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"lemma5", 0, {}};
  Rng rng(seed);
  detail::run_trials(r, trials, [&]() -> std::string {
    const auto d = detail::random_distance_set(rng, 3);
    auto [c, cp] = random_ordered_pair(rng, d, 8);
    if (!lemma5_check(c, cp)) return "chain fails for " + c.to_string() + " / " + cp.to_string();
    return {};
  });
  return r;
}

inline SuiteResult verify_lemma6(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"lemma6", 0, {}};
  Rng rng(seed);
  detail::run_trials(r, trials, [&]() -> std::string {
    const auto d = detail::random_distance_set(rng, 4);
    const auto s = random_avoiding_set(rng, d, 8, 8);
    const auto w = block_encode(s, d);
    const auto res = lemma6_check(w);
    if (res.nonincreasing == res.swap.has_value()) return "inconsistent certificate for " + s.to_string();
    if (res.swap && germ_compare(block_decode(res.swap->improved), s).relation != Relation::Greater)
      return "swap does not improve " + s.to_string();
    return {};
  });
  return r;
}

inline SuiteResult verify_outpacing(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"outpacing", 0, {}};
  Rng rng(seed);
  detail::run_trials(r, trials, [&]() -> std::string {
    RationalSet a, b;
    do a = random_rational_set(rng, 6, 6); while (a.is_finite());
    do b = random_rational_set(rng, 6, 6); while (b.is_finite());
    if (outpacing_dominates(a, b) && germ_compare(a, b).relation == Relation::Less)
      return a.to_string() + " outpaces " + b.to_string() + " but is germ-smaller";
    return {};
  });
  return r;
}

inline SuiteResult verify_valuation_range(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"valuation-range", 0, {}};
  Rng rng(seed);
  detail::run_trials(r, trials, [&]() -> std::string {
    const auto s = random_rational_set(rng, 10, 10);
    const auto v = valuation(s);  // shape is checked on construction
    const auto v1 = valuation(s.shifted(1));
    if (!(v1 == Valuation(v.density(), v.constant() - v.density())))
      return "translation rule fails for " + s.to_string();
    return {};
  });
  return r;
}

/// Domination of random {1,...,k-1}-legal words by a star-word tail, k = 3.
inline SuiteResult verify_theorem7(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"theorem7", 0, {}};
  Rng rng(seed);
  const auto d = DistanceSet::below(3);
  const auto table = build_star_table(d, 9);
  detail::run_trials(r, trials, [&]() -> std::string {
    RationalSet s;
    do s = random_avoiding_set(rng, d, 10, 9); while (s.is_finite());
    const auto w = block_encode(s, d);
    const auto out = dominate_word(w, d, table, 9);
    if (germ_compare(block_decode(out.word), s).relation == Relation::Less) return "germ decreased for " + s.to_string();
    std::set<Letter> seen(out.word.pre.begin(), out.word.pre.end());
    if (seen.size() != out.word.pre.size()) return "repeated pre-repetend letter for " + s.to_string();
    // The repetend must spell the period of 3N.
    const auto& rep = out.word.rep;
    if (rep.size() != 3) return "repetend is not 3N-shaped for " + s.to_string();
    std::size_t consonants = 0;
    for (auto a : rep) consonants += a.consonant() ? 1 : 0;
    if (consonants != 1) return "repetend density is not 1/3 for " + s.to_string();
    return {};
  });
  return r;
}

inline SuiteResult verify_theorem8(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"theorem8", 0, {}};
  for (unsigned k = 2; k <= 4; ++k) {
    const auto gap = theorem8_gap(k, trials, seed + k);
    r.trials += gap.samples;
    for (const auto& s : gap.violations) r.failures.push_back("k=" + std::to_string(k) + " violated by " + s.to_string());
  }
  return r;
}

/// Germ comparison and periodic search against the brute-force oracles.
inline SuiteResult verify_oracle(std::size_t trials, std::uint64_t seed) {
  SuiteResult r{"oracle", 0, {}};
  Rng rng(seed);
  detail::run_trials(r, trials, [&]() -> std::string {
    const auto a = random_rational_set(rng, 5, 5), b = random_rational_set(rng, 5, 5);
    if (germ_compare(a, b).relation != oracle::evaluation_compare(a, b))
      return "germ order disagrees with evaluation on " + a.to_string() + " vs " + b.to_string();
    const auto d = detail::random_distance_set(rng, 4);
    const std::size_t L = std::size_t{1} << d.max();
    if (best_periodic(d, L).density != oracle::periodic_density(d, L))
      return "periodic density disagrees for D=" + d.to_string();
    return {};
  });
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma5",   "lemma6",   "outpacing", "valuation-range",
                                              "theorem7", "theorem8", "oracle"};
  return names;
}

/// Runs one named suite, or every suite for "all".
inline std::vector<SuiteResult> run_suite(const std::string& name, std::size_t trials, std::uint64_t seed) {
  using Fn = SuiteResult (*)(std::size_t, std::uint64_t);
  const std::vector<std::pair<std::string, Fn>> table{
      {"lemma5", verify_lemma5},     {"lemma6", verify_lemma6},     {"outpacing", verify_outpacing},
      {"valuation-range", verify_valuation_range}, {"theorem7", verify_theorem7}, {"theorem8", verify_theorem8},
      {"oracle", verify_oracle}};
  std::vector<SuiteResult> out;
  for (const auto& [n, fn] : table)
    if (name == "all" || name == n) out.push_back(fn(trials, seed));
  if (out.empty()) throw PreconditionError("unknown suite '" + name + "'");
  return out;
}

}  // namespace germ
