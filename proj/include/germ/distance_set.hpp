#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "germ/error.hpp"

namespace germ {

/// Letters are m-bit masks; keep m small enough for a 32-bit mask.
inline constexpr unsigned kMaxBlockLength = 24;

/// Finite nonempty set D of positive integers with block length m = max(D) + 1.
class DistanceSet {
 public:
  explicit DistanceSet(std::vector<std::uint32_t> distances) : d_(std::move(distances)) {
    if (d_.empty()) throw PreconditionError("distance set must be nonempty");
    std::sort(d_.begin(), d_.end());
    d_.erase(std::unique(d_.begin(), d_.end()), d_.end());
    if (d_.front() == 0) throw PreconditionError("distances must be positive");
    if (d_.back() + 1 > kMaxBlockLength)
      throw BudgetError("max(D) = " + std::to_string(d_.back()) + " exceeds the supported block length");
  }
  DistanceSet(std::initializer_list<std::uint32_t> distances) : DistanceSet(std::vector<std::uint32_t>(distances)) {}

  /// {1, 2, ..., k - 1}; k >= 2.
  static DistanceSet below(std::uint32_t k) {
    if (k < 2) throw PreconditionError("{1..k-1} needs k >= 2");
    std::vector<std::uint32_t> v;
    for (std::uint32_t i = 1; i < k; ++i) v.push_back(i);
    return DistanceSet(std::move(v));
  }

  const std::vector<std::uint32_t>& distances() const { return d_; }
  std::uint32_t max() const { return d_.back(); }
  unsigned block_length() const { return d_.back() + 1; }
  bool contains(std::uint64_t x) const { return std::binary_search(d_.begin(), d_.end(), x); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(d_[i]);
    }
    return s;
  }

  friend bool operator==(const DistanceSet&, const DistanceSet&) = default;
  friend std::ostream& operator<<(std::ostream& os, const DistanceSet& d) { return os << "{" << d.to_string() << "}"; }

 private:
  std::vector<std::uint32_t> d_;
};

/// Comma-separated naturals, e.g. "4,7,11".
inline std::vector<std::uint64_t> parse_uint_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  if (text.empty()) throw ParseError("empty integer list");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw ParseError("malformed integer list '" + std::string(text) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline DistanceSet parse_distance_set(std::string_view text) {
  std::vector<std::uint32_t> d;
  for (auto v : parse_uint_list(text)) {
    if (v >= kMaxBlockLength) throw BudgetError("distance " + std::to_string(v) + " exceeds the supported block length");
    d.push_back(static_cast<std::uint32_t>(v));
  }
  return DistanceSet(std::move(d));
}

}  // namespace germ
