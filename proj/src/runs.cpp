#include "lcekit/runs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace lcekit {

namespace {

std::size_t back_lce(LceIndex& rev, std::size_t x, std::size_t y) {
  const std::size_t n = rev.n();
  return rev.lce(n - x + 1, n - y + 1);
}

// Minimal period of [s, e] given that p is a period and e - s + 1 >= 2p: any
// smaller period divides p, so the smallest qualifying divisor wins.  d is a
// period iff lce(s, s + d) spans the rest of the fragment.
std::size_t reduce_period(LceIndex& fwd, std::size_t s, std::size_t e,
                          std::size_t p) {
  const std::size_t len = e - s + 1;
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d * d <= p; ++d)
    if (p % d == 0) {
      divisors.push_back(d);
      if (d != p / d) divisors.push_back(p / d);
    }
  std::sort(divisors.begin(), divisors.end());
  for (std::size_t d : divisors) {
    if (d == p) break;
    if (fwd.lce(s, s + d) >= len - d) return d;
  }
  return p;
}

}  // namespace

std::optional<Run> extend_at_split(LceIndex& fwd, LceIndex& rev,
                                   std::size_t mid, std::size_t period,
                                   Anchor anchor) {
  const std::size_t n = fwd.n();
  if (period == 0) throw std::invalid_argument("extend_at_split: period 0");
  if (anchor == Anchor::left) {
    if (period > mid || mid >= n)
      throw std::invalid_argument("extend_at_split: block outside text");
    const std::size_t block = mid - period + 1;
    const std::size_t right = fwd.lce(block, mid + 1);
    const std::size_t left = block > 1 ? back_lce(rev, block - 1, mid) : 0;
    if (period + left + right < 2 * period) return std::nullopt;
    return Run{block - left, mid + right, period};
  }
  if (mid == 0 || mid + period > n)
    throw std::invalid_argument("extend_at_split: block outside text");
  const std::size_t right =
      mid + period + 1 <= n ? fwd.lce(mid + 1, mid + period + 1) : 0;
  const std::size_t left = back_lce(rev, mid, mid + period);
  if (period + left + right < 2 * period) return std::nullopt;
  return Run{mid + 1 - left, mid + period + right, period};
}

RunsResult compute_runs(Text& text, IndexConfig config) {
  if (text.mode() != Mode::ordered)
    throw std::logic_error("compute_runs: ordered mode required");
  const std::size_t n = text.size();
  std::vector<std::uint32_t> reversed(text.symbols().rbegin(),
                                      text.symbols().rend());
  Text rtext(std::move(reversed), Mode::ordered);

  LceIndex fwd(text, config), rev(rtext, config);
  RunsResult result;
  result.preprocessing = fwd.preprocessing_cost() + rev.preprocessing_cost();
  const StatsSnapshot before = fwd.snapshot() + rev.snapshot();

  // Candidate extents with the smallest period they were detected at.  A run
  // is caught at the first split its extent crosses, with its true period as
  // the anchor length.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> found;
  auto note = [&](const std::optional<Run>& run) {
    if (!run) return;
    auto [it, fresh] =
        found.try_emplace({run->start, run->end}, run->period);
    if (!fresh) it->second = std::min(it->second, run->period);
  };

  std::vector<std::pair<std::size_t, std::size_t>> stack{{1, n}};
  while (!stack.empty()) {
    const auto [lo, hi] = stack.back();
    stack.pop_back();
    if (lo >= hi) continue;
    const std::size_t mid = lo + (hi - lo) / 2;
    for (std::size_t p = 1; p <= mid - lo + 1; ++p)
      note(extend_at_split(fwd, rev, mid, p, Anchor::left));
    for (std::size_t p = 1; p <= hi - mid; ++p)
      note(extend_at_split(fwd, rev, mid, p, Anchor::right));
    stack.push_back({lo, mid});
    stack.push_back({mid + 1, hi});
  }

  result.runs.reserve(found.size());
  for (const auto& [extent, p] : found)
    result.runs.push_back(
        {extent.first, extent.second,
         reduce_period(fwd, extent.first, extent.second, p)});
  std::sort(result.runs.begin(), result.runs.end());

  const StatsSnapshot after = fwd.snapshot() + rev.snapshot();
  result.query_cost = after - before;
  result.lce_queries = result.query_cost.queries;
  return result;
}

}  // namespace lcekit
