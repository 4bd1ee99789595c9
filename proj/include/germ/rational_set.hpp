#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "germ/error.hpp"

namespace germ {

using Bits = std::vector<std::uint8_t>;

/// Eventually periodic subset of the naturals. Membership of n < N is
/// preperiod[n]; membership of n >= N is repetend[(n - N) mod d]. The stored
/// form is always canonical: minimal period first, then minimal preperiod.
class RationalSet {
 public:
  /// The empty set.
  RationalSet() : rep_{0} {}

  RationalSet(Bits preperiod, Bits repetend) : pre_(std::move(preperiod)), rep_(std::move(repetend)) {
    if (rep_.empty()) throw PreconditionError("repetend must be nonempty");
    for (auto& b : pre_) b = b ? 1 : 0;
    for (auto& b : rep_) b = b ? 1 : 0;
    canonicalize();
  }

  /// Grammar: SET := PRE | PRE "(" REP ")", PRE and REP over {0,1}, REP
  /// nonempty. Position 0 is the leftmost bit of PRE.
  static RationalSet parse(std::string_view text) {
    auto bits_of = [&](std::string_view part) {
      Bits out;
      out.reserve(part.size());
      for (char ch : part) {
        if (ch != '0' && ch != '1')
          throw ParseError("malformed set literal '" + std::string(text) + "': unexpected '" +
                           std::string(1, ch) + "'");
        out.push_back(static_cast<std::uint8_t>(ch - '0'));
      }
      return out;
    };
    const auto open = text.find('(');
    if (open == std::string_view::npos) {
      if (text.find(')') != std::string_view::npos)
        throw ParseError("malformed set literal '" + std::string(text) + "': unbalanced ')'");
      return RationalSet(bits_of(text), Bits{0});
    }
    if (text.back() != ')' || text.find('(', open + 1) != std::string_view::npos ||
        text.find(')') != text.size() - 1)
      throw ParseError("malformed set literal '" + std::string(text) + "'");
    const auto rep = text.substr(open + 1, text.size() - open - 2);
    if (rep.empty()) throw ParseError("malformed set literal '" + std::string(text) + "': empty repetend");
    return RationalSet(bits_of(text.substr(0, open)), bits_of(rep));
  }

  static RationalSet finite(std::span<const std::uint64_t> elements) {
    Bits pre;
    for (auto e : elements) {
      if (e >= pre.size()) pre.resize(e + 1, 0);
      pre[e] = 1;
    }
    return RationalSet(std::move(pre), Bits{0});
  }
  static RationalSet finite(std::initializer_list<std::uint64_t> elements) {
    const std::vector<std::uint64_t> v(elements);
    return finite(std::span<const std::uint64_t>(v));
  }

  /// {a, a + d, a + 2d, ...}.
  static RationalSet progression(std::uint64_t a, std::uint64_t d) {
    if (d == 0) throw PreconditionError("progression step must be positive");
    Bits rep(d, 0);
    rep[0] = 1;
    return RationalSet(Bits(a, 0), std::move(rep));
  }

  static RationalSet naturals() { return RationalSet(Bits{}, Bits{1}); }

  /// Set whose membership is given by a predicate that is periodic from
  /// `preperiod` on with period `period`.
  template <class Pred>
  static RationalSet from_predicate(Pred&& contains, std::size_t preperiod, std::size_t period) {
    Bits pre(preperiod), rep(period);
    for (std::size_t n = 0; n < preperiod; ++n) pre[n] = contains(n) ? 1 : 0;
    for (std::size_t i = 0; i < period; ++i) rep[i] = contains(preperiod + i) ? 1 : 0;
    return RationalSet(std::move(pre), std::move(rep));
  }

  const Bits& preperiod() const { return pre_; }
  const Bits& repetend() const { return rep_; }
  std::size_t preperiod_length() const { return pre_.size(); }
  std::size_t period() const { return rep_.size(); }

  bool contains(std::uint64_t n) const {
    if (n < pre_.size()) return pre_[n] != 0;
    return rep_[(n - pre_.size()) % rep_.size()] != 0;
  }

  bool is_finite() const { return rep_.size() == 1 && rep_[0] == 0; }
  bool is_empty() const { return is_finite() && pre_.empty(); }

  std::size_t ones_in_preperiod() const { return static_cast<std::size_t>(std::count(pre_.begin(), pre_.end(), 1)); }
  std::size_t ones_in_period() const { return static_cast<std::size_t>(std::count(rep_.begin(), rep_.end(), 1)); }

  /// Number of elements; only meaningful for finite sets.
  std::size_t cardinality() const {
    if (!is_finite()) throw PreconditionError("cardinality of an infinite set");
    return ones_in_preperiod();
  }

  /// The k-th smallest element (k = 0 is the minimum), if it exists.
  std::optional<std::uint64_t> element(std::uint64_t k) const {
    const std::uint64_t in_pre = ones_in_preperiod();
    if (k < in_pre) {
      for (std::uint64_t n = 0;; ++n)
        if (pre_[n] && k-- == 0) return n;
    }
    const std::uint64_t per = ones_in_period();
    if (per == 0) return std::nullopt;
    k -= in_pre;
    const std::uint64_t cycles = k / per;
    std::uint64_t idx = k % per;
    for (std::uint64_t i = 0;; ++i)
      if (rep_[i] && idx-- == 0) return pre_.size() + cycles * rep_.size() + i;
  }

  /// S + n.
  RationalSet shifted(std::uint64_t n) const {
    Bits pre(n, 0);
    pre.insert(pre.end(), pre_.begin(), pre_.end());
    return RationalSet(std::move(pre), rep_);
  }

  /// Literal in the set grammar. Finite sets print as their preperiod only; the
  /// empty set prints as "(0)".
  std::string to_string() const {
    std::string s;
    for (auto b : pre_) s.push_back(b ? '1' : '0');
    if (is_finite()) return s.empty() ? "(0)" : s;
    s.push_back('(');
    for (auto b : rep_) s.push_back(b ? '1' : '0');
    s.push_back(')');
    return s;
  }

  friend bool operator==(const RationalSet&, const RationalSet&) = default;

  friend std::ostream& operator<<(std::ostream& os, const RationalSet& s) { return os << s.to_string(); }

 private:
  void canonicalize() {
    const std::size_t d = rep_.size();
    for (std::size_t p = 1; p <= d; ++p) {
      if (d % p != 0) continue;
      bool ok = true;
      for (std::size_t i = p; i < d && ok; ++i) ok = rep_[i] == rep_[i - p];
      if (ok) {
        rep_.resize(p);
        break;
      }
    }
    while (!pre_.empty() && pre_.back() == rep_.back()) {
      pre_.pop_back();
      std::rotate(rep_.rbegin(), rep_.rbegin() + 1, rep_.rend());
    }
  }

  Bits pre_;
  Bits rep_;
};

inline RationalSet parse_set(std::string_view text) { return RationalSet::parse(text); }
inline std::string format_set(const RationalSet& s) { return s.to_string(); }

/// Canonical form of a (pre, rep) description. RationalSet is always stored
/// canonically, so this is the constructor under a name.
inline RationalSet normalize(Bits preperiod, Bits repetend) {
  return RationalSet(std::move(preperiod), std::move(repetend));
}

inline RationalSet shift(const RationalSet& s, std::uint64_t n) { return s.shifted(n); }

}  // namespace germ
