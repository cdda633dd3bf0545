#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "lcekit/text.hpp"

namespace lcekit {

// Capped LCE between two positions, used as the block comparator primitive.
using ShortLceFn = std::function<std::size_t(std::size_t, std::size_t)>;

// Lexicographic ranks of the length-t fragments starting at the given cover
// positions, ties collapsed to equal ranks.  Built by mergesort; each
// comparator call costs one capped-LCE query plus at most one symbol order
// comparison.
struct BlockRanking {
  std::size_t block_len = 0;
  std::vector<std::size_t> starts;          // increasing cover positions
  std::vector<std::uint32_t> ranks;         // parallel to starts, from 1
  std::vector<std::uint32_t> rank_by_pos;   // size n + 1, npos if absent
  std::uint32_t distinct = 0;
  std::uint64_t shortlce_calls = 0;         // comparator invocations
  std::uint64_t order_comparisons = 0;      // symbol orders spent ranking

  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();
};

BlockRanking rank_blocks(Text& text, std::vector<std::size_t> starts,
                         std::size_t block_len, const ShortLceFn& slce);

// Concatenation of the rank sequences of the cover's residue rows, each row
// closed by its own separator symbol.  Separators keep integer matches from
// crossing a row boundary, so LCE in this string counts exactly the aligned
// whole-block matches of the original text.
struct CodeString {
  struct Row {
    std::size_t rep = 0;     // first text position of the row
    std::size_t offset = 0;  // symbols preceding the row in the code
    std::size_t len = 0;     // blocks in the row
    std::uint32_t separator = 0;
  };

  std::size_t block_len = 0;
  std::vector<std::uint32_t> symbols;
  std::vector<Row> rows;
  std::vector<std::uint32_t> residue_row;  // size block_len, npos if unused
  std::uint32_t distinct = 0;

  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

  std::size_t size() const { return symbols.size(); }
  const Row& row_of(std::size_t pos) const;
  // 1-based index of the block at text position pos within the code.
  std::size_t code_pos(std::size_t pos) const;
  // Blocks from pos to the end of its row.
  std::size_t blocks_remaining(std::size_t pos) const;
};

CodeString build_code(const Text& text, const BlockRanking& ranking);

// Suffix array of an integer string by induced sorting; values must be >= 1.
std::vector<std::uint32_t> build_suffix_array(
    std::span<const std::uint32_t> symbols);

// O(1) LCE over an integer string: suffix array, inverse, LCP array, and a
// sparse table for range minima.
class IntLceStructure {
 public:
  explicit IntLceStructure(std::vector<std::uint32_t> symbols);

  std::size_t size() const { return symbols_.size(); }
  std::size_t lce(std::size_t p, std::size_t q) const;  // 1-based

  const std::vector<std::uint32_t>& suffix_array() const { return sa_; }
  const std::vector<std::uint32_t>& lcp_array() const { return lcp_; }

 private:
  std::uint32_t range_min(std::size_t lo, std::size_t hi) const;

  std::vector<std::uint32_t> symbols_;
  std::vector<std::uint32_t> sa_, isa_, lcp_;
  std::vector<std::uint32_t> log2_;
  std::vector<std::vector<std::uint32_t>> table_;
};

// Whole-block LCE: for cover positions p, q answers floor(lce(p, q) / t) via
// one integer LCE query on the code string; nullopt off the cover.
class CoarseLce {
 public:
  CoarseLce(Text& text, std::vector<std::size_t> starts, std::size_t block_len,
            const ShortLceFn& slce);

  std::optional<std::size_t> query(std::size_t p, std::size_t q) const;

  const BlockRanking& ranking() const { return ranking_; }
  const CodeString& code() const { return code_; }
  const IntLceStructure& int_lce() const { return int_; }

 private:
  std::size_t n_;
  BlockRanking ranking_;
  CodeString code_;
  IntLceStructure int_;
};

}  // namespace lcekit
