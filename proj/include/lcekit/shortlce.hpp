#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lcekit/covers.hpp"
#include "lcekit/dsu.hpp"
#include "lcekit/text.hpp"

namespace lcekit {

// Capped LCE engines: a level-k query answers min(lce(i, j), B^k) for block
// base B.  Matching whole blocks are merged in a per-level union-find, so any
// fragment equality is paid for at most once; all fresh symbol comparisons
// happen in the base-level scans, which go through the text's memoized
// equality layer.

// Base 2: levels halve.  Full per-level forests over all positions, plus
// sparse variants restricted to a t-cover S(2^{k'}) with forests over cover
// ranks.
class Pow2Engine {
 public:
  Pow2Engine(Text& text, std::size_t max_level);
  Pow2Engine(Text& text, std::size_t max_level, std::size_t sparse_level);

  std::size_t max_level() const { return max_level_; }
  std::size_t default_sparse_level() const { return default_sparse_; }

  // min(lce(i, j), 2^k) by halving recursion over full forests.
  std::size_t short_lce(std::size_t k, std::size_t i, std::size_t j);

  // Same value for i, j in S(2^{k_sparse}); nullopt outside the cover.
  std::optional<std::size_t> sparse_short_lce(std::size_t k,
                                              std::size_t k_sparse,
                                              std::size_t i, std::size_t j);

  // min(lce(i, j), 2^k) for arbitrary i, j: scan up to 2^{k_sparse} symbols,
  // then align onto the cover and delegate to the sparse recursion.
  std::size_t short_lce_fast(std::size_t k, std::size_t k_sparse,
                             std::size_t i, std::size_t j);
  std::size_t short_lce_fast(std::size_t k, std::size_t i, std::size_t j);

  const std::vector<std::uint64_t>& calls_by_level() const { return calls_; }
  const DsuForest& full_forest(std::size_t k) const;
  std::uint64_t forest_unions() const;
  std::uint64_t forest_finds() const;

  struct SparseView {
    const TCover* cover;
    std::size_t base_level;
    const std::vector<DsuForest>* forests;  // level L at index L - base_level
  };
  std::vector<SparseView> sparse_views() const;

 private:
  struct SparseContext {
    TCover cover;
    std::size_t base_level;
    std::vector<DsuForest> forests;
  };

  SparseContext& context(std::size_t k_sparse);
  std::size_t short_rec(std::size_t k, std::size_t i, std::size_t j);
  std::size_t sparse_rec(SparseContext& ctx, std::size_t k, std::size_t i,
                         std::size_t j);
  void check_level(std::size_t k) const;

  Text& text_;
  std::size_t max_level_;
  std::size_t default_sparse_;
  std::vector<DsuForest> forests_;  // level k at index k - 1, universe n
  std::map<std::size_t, SparseContext> contexts_;
  std::vector<std::uint64_t> calls_;
};

// Base 4: levels quarter.  One forest per level over the ranks of the
// monotone cover S(4^k); level 0 is served by the text's memoized equality.
class Base4Engine {
 public:
  Base4Engine(Text& text, MonotoneCoverFamily& family);

  std::size_t max_level() const { return max_level_; }

  // min(lce(i, j), 4^k) for i, j in S(4^k); nullopt outside the cover.
  std::optional<std::size_t> sparse_short_lce(std::size_t k, std::size_t i,
                                              std::size_t j);

  // min(lce(i, j), 4^k) for arbitrary i, j: climb levels, shifting both
  // arguments into ever sparser covers while the match is long enough.
  std::size_t short_lce(std::size_t k, std::size_t i, std::size_t j);

  // One entry per sparse call issued directly by the level climb.
  struct ClimbStep {
    std::size_t level;
    std::size_t delta_before;
    bool final_call;
  };
  void set_trace(std::vector<ClimbStep>* sink) { trace_ = sink; }

  const std::vector<std::uint64_t>& calls_by_level() const { return calls_; }
  const DsuForest& level_forest(std::size_t k) const;
  std::uint64_t forest_unions() const;
  std::uint64_t forest_finds() const;
  std::uint64_t level_unions(std::size_t k) const;

 private:
  std::size_t sparse_rec(std::size_t k, std::size_t i, std::size_t j);

  Text& text_;
  MonotoneCoverFamily& family_;
  std::size_t max_level_;
  std::vector<DsuForest> forests_;  // level k at index k - 1, universe |S(4^k)|
  std::vector<std::uint64_t> calls_;
  std::vector<ClimbStep>* trace_ = nullptr;
};

}  // namespace lcekit
