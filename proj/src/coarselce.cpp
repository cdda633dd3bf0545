#include "lcekit/coarselce.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>

namespace lcekit {

namespace {

// Stable top-down mergesort; one comparator call per merge step and the
// comparator is the only way two blocks are ever inspected.
template <class Cmp>
void merge_sort(std::vector<std::uint32_t>& items,
                std::vector<std::uint32_t>& buf, std::size_t lo,
                std::size_t hi, Cmp&& cmp) {
  if (hi - lo <= 1) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  merge_sort(items, buf, lo, mid, cmp);
  merge_sort(items, buf, mid, hi, cmp);
  std::size_t a = lo, b = mid, out = lo;
  while (a < mid && b < hi)
    buf[out++] = cmp(items[a], items[b]) ? items[a++] : items[b++];
  while (a < mid) buf[out++] = items[a++];
  while (b < hi) buf[out++] = items[b++];
  std::copy(buf.begin() + lo, buf.begin() + hi, items.begin() + lo);
}

}  // namespace

BlockRanking rank_blocks(Text& text, std::vector<std::size_t> starts,
                         std::size_t block_len, const ShortLceFn& slce) {
  if (block_len == 0) throw std::invalid_argument("rank_blocks: block_len 0");
  if (text.mode() != Mode::ordered)
    throw std::logic_error("rank_blocks: ordered mode required");
  BlockRanking br;
  br.block_len = block_len;
  br.starts = std::move(starts);
  const std::size_t m = br.starts.size();
  const std::uint64_t order_before = text.stats().order_comparisons;

  auto order3 = [&](std::uint32_t a, std::uint32_t b) -> std::strong_ordering {
    ++br.shortlce_calls;
    const std::size_t p = br.starts[a], q = br.starts[b];
    const std::size_t len = slce(p, q);
    if (len >= block_len) return std::strong_ordering::equal;
    return text.compare(p + len, q + len);
  };

  std::vector<std::uint32_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> buf(m);
  merge_sort(idx, buf, 0, m, [&](std::uint32_t a, std::uint32_t b) {
    return order3(a, b) != std::strong_ordering::greater;
  });

  br.ranks.assign(m, 0);
  br.rank_by_pos.assign(text.size() + 1, BlockRanking::npos);
  std::uint32_t rank = 0;
  for (std::size_t r = 0; r < m; ++r) {
    if (r == 0 || order3(idx[r - 1], idx[r]) != std::strong_ordering::equal)
      ++rank;
    br.ranks[idx[r]] = rank;
    br.rank_by_pos[br.starts[idx[r]]] = rank;
  }
  br.distinct = rank;
  br.order_comparisons = text.stats().order_comparisons - order_before;
  return br;
}

const CodeString::Row& CodeString::row_of(std::size_t pos) const {
  const std::uint32_t r = residue_row[pos % block_len];
  if (r == npos) throw std::out_of_range("CodeString::row_of");
  return rows[r];
}

std::size_t CodeString::code_pos(std::size_t pos) const {
  const Row& row = row_of(pos);
  if (pos < row.rep || (pos - row.rep) % block_len != 0 ||
      (pos - row.rep) / block_len >= row.len)
    throw std::out_of_range("CodeString::code_pos");
  return row.offset + (pos - row.rep) / block_len + 1;
}

std::size_t CodeString::blocks_remaining(std::size_t pos) const {
  const Row& row = row_of(pos);
  return row.len - (pos - row.rep) / block_len;
}

CodeString build_code(const Text& text, const BlockRanking& ranking) {
  const std::size_t t = ranking.block_len, n = text.size();
  CodeString cs;
  cs.block_len = t;
  cs.distinct = ranking.distinct;
  cs.residue_row.assign(t, CodeString::npos);

  // Rows are the residue classes of the cover, ordered by first position;
  // every cover position sits in exactly one arithmetic progression of
  // step t.
  std::vector<std::size_t> reps;
  for (std::size_t pos : ranking.starts)
    if (cs.residue_row[pos % t] == CodeString::npos) {
      cs.residue_row[pos % t] = static_cast<std::uint32_t>(reps.size());
      reps.push_back(pos);
    }

  for (std::size_t s = 0; s < reps.size(); ++s) {
    CodeString::Row row;
    row.rep = reps[s];
    row.offset = cs.symbols.size();
    row.len = (n - row.rep) / t + 1;
    row.separator = ranking.distinct + static_cast<std::uint32_t>(s) + 1;
    for (std::size_t pos = row.rep; pos <= n; pos += t) {
      const std::uint32_t r = ranking.rank_by_pos[pos];
      if (r == BlockRanking::npos)
        throw std::logic_error("build_code: cover position without rank");
      cs.symbols.push_back(r);
    }
    cs.symbols.push_back(row.separator);
    cs.rows.push_back(row);
  }
  return cs;
}

namespace {

constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

// Induced sorting.  s must end with a unique smallest symbol 0.
void sais(const std::vector<std::uint32_t>& s, std::vector<std::uint32_t>& sa,
          std::size_t sigma) {
  const std::size_t n = s.size();
  sa.assign(n, kEmpty);
  if (n == 1) {
    sa[0] = 0;
    return;
  }
  std::vector<std::uint8_t> stype(n);
  stype[n - 1] = 1;
  for (std::size_t i = n - 1; i-- > 0;)
    stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
  auto is_lms = [&](std::size_t i) {
    return i > 0 && stype[i] && !stype[i - 1];
  };

  std::vector<std::size_t> freq(sigma, 0), bucket(sigma);
  for (std::uint32_t c : s) ++freq[c];
  auto heads = [&] {
    std::size_t sum = 0;
    for (std::size_t c = 0; c < sigma; ++c) {
      bucket[c] = sum;
      sum += freq[c];
    }
  };
  auto tails = [&] {
    std::size_t sum = 0;
    for (std::size_t c = 0; c < sigma; ++c) {
      sum += freq[c];
      bucket[c] = sum;
    }
  };

  auto induce = [&](const std::vector<std::uint32_t>& lms_order) {
    std::fill(sa.begin(), sa.end(), kEmpty);
    tails();
    for (auto it = lms_order.rbegin(); it != lms_order.rend(); ++it)
      sa[--bucket[s[*it]]] = *it;
    heads();
    for (std::size_t r = 0; r < n; ++r)
      if (sa[r] != kEmpty && sa[r] > 0 && !stype[sa[r] - 1])
        sa[bucket[s[sa[r] - 1]]++] = sa[r] - 1;
    tails();
    for (std::size_t r = n; r-- > 0;)
      if (sa[r] != kEmpty && sa[r] > 0 && stype[sa[r] - 1])
        sa[--bucket[s[sa[r] - 1]]] = sa[r] - 1;
  };

  std::vector<std::uint32_t> lms;
  for (std::size_t i = 1; i < n; ++i)
    if (is_lms(i)) lms.push_back(static_cast<std::uint32_t>(i));
  induce(lms);  // sorts the LMS substrings

  std::vector<std::uint32_t> next_lms(n, static_cast<std::uint32_t>(n));
  for (std::size_t x = 0; x + 1 < lms.size(); ++x) next_lms[lms[x]] = lms[x + 1];
  auto lms_equal = [&](std::size_t a, std::size_t b) {
    const std::size_t ea = next_lms[a], eb = next_lms[b];
    if (ea == n || eb == n) return false;  // the terminal substring is unique
    if (ea - a != eb - b) return false;
    for (std::size_t o = 0; o <= ea - a; ++o)
      if (s[a + o] != s[b + o]) return false;
    return true;
  };

  std::vector<std::uint32_t> name(n, kEmpty);
  std::uint32_t names = 0;
  std::size_t prev = n;
  for (std::size_t r = 0; r < n; ++r) {
    const std::uint32_t pos = sa[r];
    if (pos == kEmpty || !is_lms(pos)) continue;
    if (prev != n && !lms_equal(prev, pos)) ++names;
    name[pos] = names;
    prev = pos;
  }
  ++names;

  std::vector<std::uint32_t> order(lms.size());
  if (names == lms.size()) {
    for (std::size_t x = 0; x < lms.size(); ++x) order[name[lms[x]]] = lms[x];
  } else {
    std::vector<std::uint32_t> reduced(lms.size()), sa1;
    for (std::size_t x = 0; x < lms.size(); ++x) reduced[x] = name[lms[x]];
    sais(reduced, sa1, names);
    for (std::size_t r = 0; r < sa1.size(); ++r) order[r] = lms[sa1[r]];
  }
  induce(order);
}

}  // namespace

std::vector<std::uint32_t> build_suffix_array(
    std::span<const std::uint32_t> symbols) {
  std::vector<std::uint32_t> s(symbols.begin(), symbols.end());
  std::uint32_t max_sym = 0;
  for (std::uint32_t v : s) {
    if (v == 0) throw std::invalid_argument("build_suffix_array: symbol 0");
    max_sym = std::max(max_sym, v);
  }
  s.push_back(0);
  std::vector<std::uint32_t> sa;
  sais(s, sa, static_cast<std::size_t>(max_sym) + 1);
  return {sa.begin() + 1, sa.end()};  // drop the terminal suffix
}

IntLceStructure::IntLceStructure(std::vector<std::uint32_t> symbols)
    : symbols_(std::move(symbols)) {
  const std::size_t m = symbols_.size();
  if (m == 0) throw std::invalid_argument("IntLceStructure: empty string");
  sa_ = build_suffix_array(symbols_);
  isa_.assign(m, 0);
  for (std::size_t r = 0; r < m; ++r) isa_[sa_[r]] = static_cast<std::uint32_t>(r);

  // Kasai: h decreases by at most one per position.
  lcp_.assign(m > 1 ? m - 1 : 0, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (h > 0) --h;
    const std::size_t r = isa_[i];
    if (r + 1 == m) {
      h = 0;
      continue;
    }
    const std::size_t j = sa_[r + 1];
    while (i + h < m && j + h < m && symbols_[i + h] == symbols_[j + h]) ++h;
    lcp_[r] = static_cast<std::uint32_t>(h);
  }

  const std::size_t e = lcp_.size();
  log2_.assign(e + 1, 0);
  for (std::size_t v = 2; v <= e; ++v) log2_[v] = log2_[v / 2] + 1;
  if (e > 0) {
    table_.push_back(lcp_);
    for (std::size_t lvl = 1; (std::size_t{1} << lvl) <= e; ++lvl) {
      const std::size_t w = std::size_t{1} << lvl;
      std::vector<std::uint32_t> row(e - w + 1);
      for (std::size_t i = 0; i + w <= e; ++i)
        row[i] = std::min(table_[lvl - 1][i], table_[lvl - 1][i + w / 2]);
      table_.push_back(std::move(row));
    }
  }
}

std::uint32_t IntLceStructure::range_min(std::size_t lo, std::size_t hi) const {
  const std::size_t lvl = log2_[hi - lo + 1];
  return std::min(table_[lvl][lo],
                  table_[lvl][hi + 1 - (std::size_t{1} << lvl)]);
}

std::size_t IntLceStructure::lce(std::size_t p, std::size_t q) const {
  const std::size_t m = symbols_.size();
  if (p == 0 || q == 0 || p > m || q > m)
    throw std::out_of_range("IntLceStructure::lce");
  if (p == q) return m - p + 1;
  std::size_t a = isa_[p - 1], b = isa_[q - 1];
  if (a > b) std::swap(a, b);
  return range_min(a, b - 1);
}

CoarseLce::CoarseLce(Text& text, std::vector<std::size_t> starts,
                     std::size_t block_len, const ShortLceFn& slce)
    : n_(text.size()),
      ranking_(rank_blocks(text, std::move(starts), block_len, slce)),
      code_(build_code(text, ranking_)),
      int_(code_.symbols) {}

std::optional<std::size_t> CoarseLce::query(std::size_t p,
                                            std::size_t q) const {
  if (p == 0 || q == 0 || p > n_ || q > n_) return std::nullopt;
  if (ranking_.rank_by_pos[p] == BlockRanking::npos ||
      ranking_.rank_by_pos[q] == BlockRanking::npos)
    return std::nullopt;
  if (p == q) return code_.blocks_remaining(p);
  const std::size_t cp = code_.code_pos(p), cq = code_.code_pos(q);
  // Separators differ per row, so the integer match never leaves a row and
  // counts exactly the aligned equal blocks.
  return int_.lce(cp, cq);
}

}  // namespace lcekit
