#include "lcekit/lce.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lcekit {

namespace {

std::size_t ceil_log4(std::size_t v) {
  std::size_t k = 0;
  while (pow4(k) < v) ++k;
  return k;
}

std::size_t ceil_log2(std::size_t v) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < v) ++k;
  return k;
}

bool is_pow4(std::size_t v) {
  if (v == 0 || (v & (v - 1)) != 0) return false;
  std::size_t k = 0;
  while ((std::size_t{1} << k) != v) ++k;
  return k % 2 == 0;
}

// Default coarse block length: about log2(n) squared, rounded up to a power
// of 4, at most max(16, n/4).
std::size_t default_block_len(std::size_t n) {
  const std::size_t lg = ceil_log2(std::max<std::size_t>(n, 2));
  std::size_t t = pow4(ceil_log4(std::max<std::size_t>(16, lg * lg)));
  const std::size_t cap = std::max<std::size_t>(16, n / 4);
  while (t > cap && t > 4) t >>= 2;
  return t;
}

void accumulate_levels(std::vector<std::uint64_t>& into,
                       const std::vector<std::uint64_t>& from) {
  if (into.size() < from.size()) into.resize(from.size(), 0);
  for (std::size_t k = 0; k < from.size(); ++k) into[k] += from[k];
}

}  // namespace

StatsSnapshot& StatsSnapshot::operator+=(const StatsSnapshot& o) {
  queries += o.queries;
  order_comparisons += o.order_comparisons;
  equality_tests += o.equality_tests;
  memo_hits += o.memo_hits;
  dsu_finds += o.dsu_finds;
  dsu_unions += o.dsu_unions;
  accumulate_levels(shortlce_calls_by_level, o.shortlce_calls_by_level);
  accumulate_levels(unions_by_level, o.unions_by_level);
  return *this;
}

StatsSnapshot& StatsSnapshot::operator-=(const StatsSnapshot& o) {
  queries -= o.queries;
  order_comparisons -= o.order_comparisons;
  equality_tests -= o.equality_tests;
  memo_hits -= o.memo_hits;
  dsu_finds -= o.dsu_finds;
  dsu_unions -= o.dsu_unions;
  if (shortlce_calls_by_level.size() < o.shortlce_calls_by_level.size())
    shortlce_calls_by_level.resize(o.shortlce_calls_by_level.size(), 0);
  for (std::size_t k = 0; k < o.shortlce_calls_by_level.size(); ++k)
    shortlce_calls_by_level[k] -= o.shortlce_calls_by_level[k];
  if (unions_by_level.size() < o.unions_by_level.size())
    unions_by_level.resize(o.unions_by_level.size(), 0);
  for (std::size_t k = 0; k < o.unions_by_level.size(); ++k)
    unions_by_level[k] -= o.unions_by_level[k];
  return *this;
}

LceIndex::LceIndex(Text& text, IndexConfig config)
    : text_(text), config_(config), n_(text.size()) {
  baseline_ = snapshot();
  if (text_.mode() == Mode::unordered && config_.engine == EngineKind::pow2)
    throw std::invalid_argument(
        "LceIndex: unordered mode requires the base-4 engine");

  t_ = config_.block_len.value_or(default_block_len(n_));
  if (!is_pow4(t_) || t_ < 4)
    throw std::invalid_argument("LceIndex: block_len must be a power of 4");
  coarse_level_ = ceil_log4(t_);
  top4_ = ceil_log4(n_);
  top2_ = ceil_log2(n_);

  const bool want_coarse = text_.mode() == Mode::ordered && t_ + 1 <= n_;
  if (config_.engine == EngineKind::base4) {
    family_ = std::make_unique<MonotoneCoverFamily>(n_, top4_);
    engine4_ = std::make_unique<Base4Engine>(text_, *family_);
    if (want_coarse) {
      ShortLceFn slce = [this](std::size_t p, std::size_t q) {
        return engine4_->short_lce(coarse_level_, p, q);
      };
      coarse_ = std::make_unique<CoarseLce>(
          text_, family_->level(coarse_level_).members, t_, slce);
    }
  } else {
    engine2_ = std::make_unique<Pow2Engine>(text_, top2_);
    if (want_coarse) {
      tcover_ = std::make_unique<TCover>(t_, n_);
      ShortLceFn slce = [this](std::size_t p, std::size_t q) {
        return engine2_->short_lce_fast(2 * coarse_level_, p, q);
      };
      coarse_ =
          std::make_unique<CoarseLce>(text_, tcover_->members(), t_, slce);
    }
  }
  after_build_ = snapshot();
}

std::size_t LceIndex::top_level() const {
  return config_.engine == EngineKind::base4 ? top4_ : top2_;
}

void LceIndex::check_query(std::size_t i, std::size_t j) const {
  if (i == 0 || j == 0 || i > n_ || j > n_)
    throw std::out_of_range("LceIndex: query position outside text");
}

std::size_t LceIndex::short_capped(std::size_t i, std::size_t j) {
  if (engine4_) return engine4_->short_lce(coarse_level_, i, j);
  return engine2_->short_lce_fast(2 * coarse_level_, i, j);
}

std::size_t LceIndex::short_full(std::size_t i, std::size_t j) {
  if (engine4_) return engine4_->short_lce(top4_, i, j);
  return engine2_->short_lce_fast(top2_, i, j);
}

std::size_t LceIndex::cover_shift(std::size_t i, std::size_t j) const {
  if (engine4_) return MonotoneCoverFamily::find_shift(coarse_level_, i, j);
  return tcover_->shift(i, j);
}

std::size_t LceIndex::lce(std::size_t i, std::size_t j) {
  if (text_.mode() == Mode::unordered) return lce_unordered(i, j);
  check_query(i, j);
  ++queries_;
  if (i == j) return n_ - i + 1;
  // Near the end of the text the shifted arguments would overrun the cover,
  // and the capped answer is already exact there.
  if (!coarse_ || i > n_ - t_ || j > n_ - t_) return short_full(i, j);
  const std::size_t l1 = short_capped(i, j);
  if (l1 < t_) return l1;
  const std::size_t delta = cover_shift(i, j);
  const auto blocks = coarse_->query(i + delta, j + delta);
  if (!blocks)
    throw std::logic_error("LceIndex: shifted argument off the cover");
  const std::size_t l2 = t_ * *blocks;
  const std::size_t l3 = short_capped(i + delta + l2, j + delta + l2);
  return delta + l2 + l3;
}

std::size_t LceIndex::lce_unordered(std::size_t i, std::size_t j) {
  if (text_.mode() != Mode::unordered)
    throw std::logic_error("LceIndex::lce_unordered: index is ordered");
  check_query(i, j);
  ++queries_;
  if (i == j) return n_ - i + 1;
  return engine4_->short_lce(top4_, i, j);
}

LceIndex::BatchResult LceIndex::batch(
    std::span<const std::pair<std::size_t, std::size_t>> queries) {
  const StatsSnapshot before = snapshot();
  BatchResult result;
  result.answers.reserve(queries.size());
  for (std::size_t x = 0; x < queries.size(); ++x) {
    const auto [i, j] = queries[x];
    if (i == 0 || j == 0 || i > n_ || j > n_)
      throw std::invalid_argument("LceIndex::batch: query #" +
                                  std::to_string(x + 1) + " out of range");
    result.answers.push_back(text_.mode() == Mode::ordered ? lce(i, j)
                                                           : lce_unordered(i, j));
  }
  result.cost = snapshot() - before;
  return result;
}

StatsSnapshot LceIndex::snapshot() const {
  StatsSnapshot s;
  s.queries = queries_;
  const ComparisonStats& ts = text_.stats();
  s.order_comparisons = ts.order_comparisons;
  s.equality_tests = ts.equality_tests;
  s.memo_hits = ts.memo_hits;
  const DsuForest::Stats& ms = text_.memo_forest().stats();
  s.dsu_finds = ms.finds;
  s.dsu_unions = ms.unions;
  s.unions_by_level.assign(1, ms.unions);
  if (engine4_) {
    s.dsu_finds += engine4_->forest_finds();
    s.dsu_unions += engine4_->forest_unions();
    s.shortlce_calls_by_level = engine4_->calls_by_level();
    s.unions_by_level.resize(engine4_->max_level() + 1, 0);
    for (std::size_t k = 1; k <= engine4_->max_level(); ++k)
      s.unions_by_level[k] = engine4_->level_forest(k).stats().unions;
  }
  if (engine2_) {
    s.dsu_finds += engine2_->forest_finds();
    s.dsu_unions += engine2_->forest_unions();
    s.shortlce_calls_by_level = engine2_->calls_by_level();
    s.unions_by_level.resize(engine2_->max_level() + 1, 0);
    for (std::size_t k = 1; k <= engine2_->max_level(); ++k)
      s.unions_by_level[k] = engine2_->full_forest(k).stats().unions;
  }
  return s;
}

StatsSnapshot LceIndex::preprocessing_cost() const {
  return after_build_ - baseline_;
}

StatsSnapshot LceIndex::total_cost() const { return snapshot() - baseline_; }

}  // namespace lcekit
