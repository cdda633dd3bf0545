#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "lcekit/dsu.hpp"

namespace lcekit {

enum class Mode { ordered, unordered };

// Counted symbol accesses.  order_comparisons and equality_tests together are
// the number of symbol comparisons charged to the structure; memo_hits are
// equality answers served from the union-find layer at zero charge.
struct ComparisonStats {
  std::uint64_t order_comparisons = 0;
  std::uint64_t equality_tests = 0;
  std::uint64_t memo_hits = 0;

  std::uint64_t symbol_comparisons() const {
    return order_comparisons + equality_tests;
  }
};

// A text of n >= 1 symbols at positions 1..n, accessed only through counted
// comparisons.  Positions beyond n behave as unique sentinel symbols: each is
// smaller than every real symbol, two sentinels order by position, and any
// comparison touching a sentinel is resolved for free.  The memoized equality
// layer (memo_eq) keeps one union-find class per set of positions known to
// hold the same symbol, so repeated equality questions cost nothing.
class Text {
 public:
  Text(std::vector<std::uint32_t> symbols, Mode mode);
  static Text from_bytes(std::string_view bytes, Mode mode);

  std::size_t size() const { return symbols_.size(); }
  Mode mode() const { return mode_; }
  // The span aliases this object; calling on a temporary would dangle.
  std::span<const std::uint32_t> symbols() const& { return symbols_; }
  std::span<const std::uint32_t> symbols() const&& = delete;

  // Three-way order of the symbols at i and j; ordered mode only.
  std::strong_ordering compare(std::size_t i, std::size_t j);

  // Plain counted equality; works in both modes.
  bool eq(std::size_t i, std::size_t j);

  // Equality through the union-find layer; requires 1 <= i, j <= n.  A true
  // answer merges the classes of i and j, so it is charged at most once.
  bool memo_eq(std::size_t i, std::size_t j);

  const ComparisonStats& stats() const { return stats_; }
  DsuForest& memo_forest() { return memo_; }
  const DsuForest& memo_forest() const { return memo_; }

 private:
  std::uint32_t at(std::size_t i) const { return symbols_[i - 1]; }

  std::vector<std::uint32_t> symbols_;
  Mode mode_;
  ComparisonStats stats_;
  DsuForest memo_;
};

}  // namespace lcekit
