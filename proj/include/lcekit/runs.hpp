#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcekit/lce.hpp"
#include "lcekit/run.hpp"
#include "lcekit/text.hpp"

namespace lcekit {

// Which half of a split holds the tested period block.
enum class Anchor { left, right };

// Maximal p-periodic fragment crossing the boundary between mid and mid + 1,
// anchored by a full period block ending at mid (left) or starting at
// mid + 1 (right).  Extensions are global LCE / reverse LCE queries, so the
// returned extent is exact even outside the current recursion segment.
// Returns the fragment iff its length reaches 2 * period.
std::optional<Run> extend_at_split(LceIndex& fwd, LceIndex& rev,
                                   std::size_t mid, std::size_t period,
                                   Anchor anchor);

struct RunsResult {
  std::vector<Run> runs;          // sorted by (start, end, period)
  std::uint64_t lce_queries = 0;  // queries against both indexes
  StatsSnapshot preprocessing;    // both indexes, build phase
  StatsSnapshot query_cost;       // both indexes, detection phase
};

// All runs of the text: divide and conquer over split points, each candidate
// recovered by two anchored extensions, then periods reduced to minimal and
// extents deduplicated.
RunsResult compute_runs(Text& text, IndexConfig config = {});

}  // namespace lcekit
