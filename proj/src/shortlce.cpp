#include "lcekit/shortlce.hpp"

#include <stdexcept>

namespace lcekit {

namespace {

std::size_t ceil_log2(std::size_t v) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < v) ++k;
  return k;
}

// Base-level equality: identity and sentinels resolve for free, real symbol
// pairs go through the memoized layer.
bool symbols_agree(Text& text, std::size_t i, std::size_t j) {
  if (i == j) return true;
  const std::size_t n = text.size();
  if (i > n || j > n) return false;
  return text.memo_eq(i, j);
}

std::size_t scan_capped(Text& text, std::size_t i, std::size_t j,
                        std::size_t cap) {
  if (i == j) return cap;
  std::size_t len = 0;
  while (len < cap && symbols_agree(text, i + len, j + len)) ++len;
  return len;
}

std::size_t default_sparse_policy(std::size_t n, std::size_t max_level) {
  // 2^{k'} near log2 n keeps the cover dense enough for the naive prefix
  // scans to stay cheap.
  std::size_t ks = ceil_log2(std::max<std::size_t>(ceil_log2(std::max<std::size_t>(n, 2)), 1));
  while (ks > 0 && (std::size_t{1} << ks) > n) --ks;
  return std::min(ks, max_level);
}

}  // namespace

Pow2Engine::Pow2Engine(Text& text, std::size_t max_level)
    : Pow2Engine(text, max_level,
                 default_sparse_policy(text.size(), max_level)) {}

Pow2Engine::Pow2Engine(Text& text, std::size_t max_level,
                       std::size_t sparse_level)
    : text_(text), max_level_(max_level), default_sparse_(sparse_level) {
  if (max_level_ >= 8 * sizeof(std::size_t) - 1)
    throw std::invalid_argument("Pow2Engine: level cap too large");
  forests_.reserve(max_level_);
  for (std::size_t k = 1; k <= max_level_; ++k)
    forests_.emplace_back(text_.size());
  calls_.assign(max_level_ + 1, 0);
}

void Pow2Engine::check_level(std::size_t k) const {
  if (k > max_level_) throw std::invalid_argument("Pow2Engine: level too high");
}

const DsuForest& Pow2Engine::full_forest(std::size_t k) const {
  if (k == 0 || k > max_level_)
    throw std::out_of_range("Pow2Engine::full_forest");
  return forests_[k - 1];
}

Pow2Engine::SparseContext& Pow2Engine::context(std::size_t k_sparse) {
  auto it = contexts_.find(k_sparse);
  if (it == contexts_.end()) {
    const std::size_t t = std::size_t{1} << k_sparse;
    SparseContext ctx{TCover(t, text_.size()), k_sparse, {}};
    const std::size_t universe = ctx.cover.members().size();
    ctx.forests.reserve(max_level_ - k_sparse + 1);
    for (std::size_t k = k_sparse; k <= max_level_; ++k)
      ctx.forests.emplace_back(universe);
    it = contexts_.emplace(k_sparse, std::move(ctx)).first;
  }
  return it->second;
}

std::size_t Pow2Engine::short_lce(std::size_t k, std::size_t i,
                                  std::size_t j) {
  check_level(k);
  if (i == 0 || j == 0) throw std::out_of_range("Pow2Engine::short_lce");
  return short_rec(k, i, j);
}

std::size_t Pow2Engine::short_rec(std::size_t k, std::size_t i,
                                  std::size_t j) {
  ++calls_[k];
  const std::size_t cap = std::size_t{1} << k;
  if (i == j) return cap;
  if (k == 0) return symbols_agree(text_, i, j) ? 1 : 0;
  const std::size_t n = text_.size();
  DsuForest& forest = forests_[k - 1];
  if (i <= n && j <= n && forest.same(i - 1, j - 1)) return cap;
  const std::size_t half = cap >> 1;
  std::size_t len = short_rec(k - 1, i, j);
  if (len == half) len += short_rec(k - 1, i + half, j + half);
  if (len == cap && i <= n && j <= n) forest.unite(i - 1, j - 1);
  return len;
}

std::optional<std::size_t> Pow2Engine::sparse_short_lce(std::size_t k,
                                                        std::size_t k_sparse,
                                                        std::size_t i,
                                                        std::size_t j) {
  check_level(k);
  if (k_sparse > k)
    throw std::invalid_argument("sparse_short_lce: k_sparse > k");
  if (i == 0 || j == 0) throw std::out_of_range("Pow2Engine::sparse_short_lce");
  if ((std::size_t{1} << k_sparse) > text_.size())
    throw std::invalid_argument("sparse_short_lce: cover coarser than text");
  SparseContext& ctx = context(k_sparse);
  if (!ctx.cover.member(i) || !ctx.cover.member(j)) return std::nullopt;
  return sparse_rec(ctx, k, i, j);
}

std::size_t Pow2Engine::sparse_rec(SparseContext& ctx, std::size_t k,
                                   std::size_t i, std::size_t j) {
  ++calls_[k];
  const std::size_t cap = std::size_t{1} << k;
  if (i == j) return cap;
  const std::uint32_t ri = ctx.cover.rank(i), rj = ctx.cover.rank(j);
  const bool tracked = ri != TCover::npos && rj != TCover::npos;
  DsuForest& forest = ctx.forests[k - ctx.base_level];
  if (tracked && forest.same(ri, rj)) return cap;
  std::size_t len;
  if (k == ctx.base_level) {
    len = scan_capped(text_, i, j, cap);
  } else {
    const std::size_t half = cap >> 1;
    len = sparse_rec(ctx, k - 1, i, j);
    if (len == half) len += sparse_rec(ctx, k - 1, i + half, j + half);
  }
  if (len == cap && tracked) forest.unite(ri, rj);
  return len;
}

std::size_t Pow2Engine::short_lce_fast(std::size_t k, std::size_t k_sparse,
                                       std::size_t i, std::size_t j) {
  check_level(k);
  if (k_sparse > k)
    throw std::invalid_argument("short_lce_fast: k_sparse > k");
  if (i == 0 || j == 0) throw std::out_of_range("Pow2Engine::short_lce_fast");
  const std::size_t cap = std::size_t{1} << k;
  if (i == j) return cap;
  const std::size_t t = std::size_t{1} << k_sparse;
  const std::size_t len = scan_capped(text_, i, j, t);
  if (len < t) return len;
  SparseContext& ctx = context(k_sparse);
  // The first t symbols match, so shifting both arguments onto the cover
  // skips only known-equal symbols.
  const std::size_t delta = ctx.cover.shift(i, j);
  return std::min(cap, delta + sparse_rec(ctx, k, i + delta, j + delta));
}

std::size_t Pow2Engine::short_lce_fast(std::size_t k, std::size_t i,
                                       std::size_t j) {
  return short_lce_fast(k, std::min(default_sparse_, k), i, j);
}

std::uint64_t Pow2Engine::forest_unions() const {
  std::uint64_t total = 0;
  for (const auto& f : forests_) total += f.stats().unions;
  for (const auto& [ks, ctx] : contexts_)
    for (const auto& f : ctx.forests) total += f.stats().unions;
  return total;
}

std::uint64_t Pow2Engine::forest_finds() const {
  std::uint64_t total = 0;
  for (const auto& f : forests_) total += f.stats().finds;
  for (const auto& [ks, ctx] : contexts_)
    for (const auto& f : ctx.forests) total += f.stats().finds;
  return total;
}

std::vector<Pow2Engine::SparseView> Pow2Engine::sparse_views() const {
  std::vector<SparseView> views;
  for (const auto& [ks, ctx] : contexts_)
    views.push_back({&ctx.cover, ctx.base_level, &ctx.forests});
  return views;
}

Base4Engine::Base4Engine(Text& text, MonotoneCoverFamily& family)
    : text_(text), family_(family), max_level_(family.max_level()) {
  forests_.reserve(max_level_);
  for (std::size_t k = 1; k <= max_level_; ++k)
    forests_.emplace_back(family_.level(k).members.size());
  calls_.assign(max_level_ + 1, 0);
}

const DsuForest& Base4Engine::level_forest(std::size_t k) const {
  if (k == 0 || k > max_level_)
    throw std::out_of_range("Base4Engine::level_forest");
  return forests_[k - 1];
}

std::optional<std::size_t> Base4Engine::sparse_short_lce(std::size_t k,
                                                         std::size_t i,
                                                         std::size_t j) {
  if (k > max_level_)
    throw std::invalid_argument("Base4Engine: level too high");
  if (i == 0 || j == 0) throw std::out_of_range("Base4Engine::sparse_short_lce");
  const std::size_t n = text_.size();
  if (i > n || j > n || !MonotoneCoverFamily::member(k, i) ||
      !MonotoneCoverFamily::member(k, j))
    return std::nullopt;
  return sparse_rec(k, i, j);
}

std::size_t Base4Engine::sparse_rec(std::size_t k, std::size_t i,
                                    std::size_t j) {
  ++calls_[k];
  const std::size_t cap = pow4(k);
  if (i == j) return cap;
  if (k == 0) return symbols_agree(text_, i, j) ? 1 : 0;
  const std::size_t n = text_.size();
  const auto& rank = family_.level(k).rank;
  const std::uint32_t ri = i <= n ? rank[i] : MonotoneCoverFamily::npos;
  const std::uint32_t rj = j <= n ? rank[j] : MonotoneCoverFamily::npos;
  const bool tracked =
      ri != MonotoneCoverFamily::npos && rj != MonotoneCoverFamily::npos;
  DsuForest& forest = forests_[k - 1];
  if (tracked && forest.same(ri, rj)) return cap;
  // Quarter blocks stay inside S(4^{k-1}): shifting by multiples of 4^{k-1}
  // keeps the low digits intact.
  const std::size_t quarter = cap >> 2;
  std::size_t len = 0;
  for (std::size_t q = 0; q < 4; ++q) {
    len += sparse_rec(k - 1, i + q * quarter, j + q * quarter);
    if (len < (q + 1) * quarter) break;
  }
  if (len == cap && tracked) forest.unite(ri, rj);
  return len;
}

std::size_t Base4Engine::short_lce(std::size_t k, std::size_t i,
                                   std::size_t j) {
  if (k > max_level_)
    throw std::invalid_argument("Base4Engine: level too high");
  if (i == 0 || j == 0) throw std::out_of_range("Base4Engine::short_lce");
  const std::size_t cap = pow4(k);
  if (i == j) return cap;
  std::size_t len = 0, delta = 0;
  // Invariant: i + delta and j + delta lie in S(4^{kp}) and the first delta
  // symbols match (len >= delta).  Membership in the next level only needs
  // digit kp, which a shift by 4^{kp} advances without touching lower digits.
  for (std::size_t kp = 0; kp < k; ++kp) {
    const std::size_t step = pow4(kp);
    while (base4_digit(i + delta, kp) == 0 ||
           base4_digit(j + delta, kp) == 0) {
      if (trace_) trace_->push_back({kp, delta, false});
      len += sparse_rec(kp, i + delta, j + delta);
      delta += step;
      if (len < delta) return std::min(cap, len);
    }
  }
  if (trace_) trace_->push_back({k, delta, true});
  return std::min(cap, delta + sparse_rec(k, i + delta, j + delta));
}

std::uint64_t Base4Engine::forest_unions() const {
  std::uint64_t total = 0;
  for (const auto& f : forests_) total += f.stats().unions;
  return total;
}

std::uint64_t Base4Engine::forest_finds() const {
  std::uint64_t total = 0;
  for (const auto& f : forests_) total += f.stats().finds;
  return total;
}

std::uint64_t Base4Engine::level_unions(std::size_t k) const {
  if (k == 0) return text_.memo_forest().stats().unions;
  return level_forest(k).stats().unions;
}

}  // namespace lcekit
