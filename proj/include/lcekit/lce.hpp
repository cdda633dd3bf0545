#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lcekit/coarselce.hpp"
#include "lcekit/covers.hpp"
#include "lcekit/shortlce.hpp"
#include "lcekit/text.hpp"

namespace lcekit {

enum class EngineKind { base4, pow2 };

struct IndexConfig {
  EngineKind engine = EngineKind::base4;
  // Block length of the coarse layer; a power of 4.  Defaults to roughly
  // log^2 n, clamped to at most max(16, n/4).  Values exceeding n - 1 turn
  // the coarse layer off and queries stay on the capped engines.
  std::optional<std::size_t> block_len;
};

// Cumulative work counters; snapshots subtract to give per-phase costs.
struct StatsSnapshot {
  std::uint64_t queries = 0;
  std::uint64_t order_comparisons = 0;
  std::uint64_t equality_tests = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t dsu_finds = 0;
  std::uint64_t dsu_unions = 0;
  std::vector<std::uint64_t> shortlce_calls_by_level;
  std::vector<std::uint64_t> unions_by_level;

  std::uint64_t symbol_comparisons() const {
    return order_comparisons + equality_tests;
  }
  StatsSnapshot& operator+=(const StatsSnapshot& o);
  StatsSnapshot& operator-=(const StatsSnapshot& o);
  friend StatsSnapshot operator+(StatsSnapshot a, const StatsSnapshot& b) {
    return a += b;
  }
  friend StatsSnapshot operator-(StatsSnapshot a, const StatsSnapshot& b) {
    return a -= b;
  }
};

// On-line LCE queries against a text that is only reachable through counted
// comparisons.  Ordered mode answers any query as short + coarse + short;
// unordered mode relies on equality alone and never issues an order
// comparison after construction.
class LceIndex {
 public:
  explicit LceIndex(Text& text, IndexConfig config = {});

  std::size_t n() const { return n_; }
  Mode mode() const { return text_.mode(); }
  EngineKind engine() const { return config_.engine; }
  std::size_t block_len() const { return t_; }
  bool has_coarse() const { return coarse_ != nullptr; }
  std::size_t top_level() const;

  std::size_t lce(std::size_t i, std::size_t j);
  std::size_t lce_unordered(std::size_t i, std::size_t j);

  struct BatchResult {
    std::vector<std::size_t> answers;
    StatsSnapshot cost;
  };
  BatchResult batch(
      std::span<const std::pair<std::size_t, std::size_t>> queries);

  StatsSnapshot snapshot() const;      // absolute counters
  StatsSnapshot preprocessing_cost() const;
  StatsSnapshot total_cost() const;

  Text& text() { return text_; }
  Base4Engine* base4_engine() { return engine4_.get(); }
  Pow2Engine* pow2_engine() { return engine2_.get(); }
  CoarseLce* coarse() { return coarse_.get(); }
  MonotoneCoverFamily* family() { return family_.get(); }
  TCover* tcover() { return tcover_.get(); }

 private:
  std::size_t short_capped(std::size_t i, std::size_t j);  // cap block_len
  std::size_t short_full(std::size_t i, std::size_t j);    // cap >= n
  std::size_t cover_shift(std::size_t i, std::size_t j) const;
  void check_query(std::size_t i, std::size_t j) const;

  Text& text_;
  IndexConfig config_;
  std::size_t n_;
  std::size_t t_ = 0;          // coarse block length (0: none configured)
  std::size_t coarse_level_ = 0;  // log4 of t_
  std::size_t top4_ = 0;
  std::size_t top2_ = 0;
  std::unique_ptr<MonotoneCoverFamily> family_;
  std::unique_ptr<Base4Engine> engine4_;
  std::unique_ptr<Pow2Engine> engine2_;
  std::unique_ptr<TCover> tcover_;
  std::unique_ptr<CoarseLce> coarse_;
  std::uint64_t queries_ = 0;
  StatsSnapshot baseline_;
  StatsSnapshot after_build_;
};

}  // namespace lcekit
