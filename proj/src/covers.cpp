#include "lcekit/covers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcekit {

DifferenceCover build_difference_cover(std::size_t t) {
  if (t == 0) throw std::invalid_argument("build_difference_cover: t == 0");
  // r = ceil(sqrt(t)); {0..r-1} gives differences 0..r-1, and the arithmetic
  // progression {r, 2r, ..., r*r} reaches any d = i*r + s as the difference
  // of (i+1)*r and r - s.
  std::size_t r = 1;
  while (r * r < t) ++r;
  std::vector<std::size_t> residues;
  for (std::size_t d = 0; d < r && d < t; ++d) residues.push_back(d);
  for (std::size_t m = r; m <= r * r; m += r) residues.push_back(m % t);
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()),
                 residues.end());
  return {t, std::move(residues)};
}

bool verify_difference_cover(std::size_t t,
                             const std::vector<std::size_t>& residues) {
  if (t == 0) return false;
  for (std::size_t d : residues)
    if (d >= t) return false;
  std::vector<char> seen(t, 0);
  for (std::size_t x : residues)
    for (std::size_t y : residues) seen[(x + t - y) % t] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

TCover::TCover(std::size_t t, std::size_t n)
    : t_(t), n_(n), cover_(build_difference_cover(t)) {
  init();
}

TCover::TCover(std::size_t t, std::size_t n, DifferenceCover cover)
    : t_(t), n_(n), cover_(std::move(cover)) {
  if (cover_.modulus != t || !verify_difference_cover(t, cover_.residues))
    throw std::invalid_argument("TCover: not a difference cover");
  init();
}

void TCover::init() {
  if (t_ == 0) throw std::invalid_argument("TCover: t == 0");
  if (t_ > n_) throw std::invalid_argument("TCover: t > n");
  in_cover_.assign(t_, 0);
  for (std::size_t d : cover_.residues) in_cover_[d] = 1;
  // Witness x in D per residue difference c: with y in D and x - y = c
  // (mod t), shifting j onto x lands i on y.
  shift_witness_.assign(t_, t_);
  for (std::size_t x : cover_.residues)
    for (std::size_t y : cover_.residues) {
      std::size_t c = (x + t_ - y) % t_;
      if (shift_witness_[c] == t_) shift_witness_[c] = x;
    }
  rank_.assign(n_ + 1, npos);
  for (std::size_t pos = 1; pos <= n_; ++pos)
    if (in_cover_[pos % t_]) {
      rank_[pos] = static_cast<std::uint32_t>(members_.size());
      members_.push_back(pos);
    }
}

std::size_t TCover::shift(std::size_t i, std::size_t j) const {
  std::size_t c = ((j % t_) + t_ - (i % t_)) % t_;
  std::size_t x = shift_witness_[c];
  return (x + t_ - (j % t_)) % t_;
}

MonotoneCoverFamily::MonotoneCoverFamily(std::size_t n, std::size_t max_level)
    : n_(n), levels_(max_level + 1), built_(max_level + 1, false) {
  if (n == 0) throw std::invalid_argument("MonotoneCoverFamily: n == 0");
}

const MonotoneCoverFamily::Level& MonotoneCoverFamily::level(std::size_t k) {
  if (k >= levels_.size())
    throw std::out_of_range("MonotoneCoverFamily::level");
  if (!built_[k]) {
    Level& lv = levels_[k];
    lv.block_len = pow4(k);
    lv.rank.assign(n_ + 1, npos);
    for (std::size_t pos = 1; pos <= n_; ++pos)
      if (member(k, pos)) {
        lv.rank[pos] = static_cast<std::uint32_t>(lv.members.size());
        lv.members.push_back(pos);
      }
    built_[k] = true;
  }
  return levels_[k];
}

bool MonotoneCoverFamily::member(std::size_t k, std::size_t pos) {
  if (pos == 0) return false;
  for (std::size_t d = 0; d < k; ++d)
    if (base4_digit(pos, d) == 0) return false;
  return true;
}

std::size_t MonotoneCoverFamily::monotone_shift(std::size_t k, std::size_t i,
                                                std::size_t j) {
  if (!member(k, i) || !member(k, j))
    throw std::invalid_argument("monotone_shift: argument outside cover");
  // Digit d at position k excludes only the candidate making it wrap to 0,
  // so two arguments rule out at most two of {0, 1, 2}.
  const std::size_t di = base4_digit(i, k), dj = base4_digit(j, k);
  for (std::size_t m = 0; m < 3; ++m)
    if ((di + m) % 4 != 0 && (dj + m) % 4 != 0) return m * pow4(k);
  throw std::logic_error("monotone_shift: no candidate");
}

std::size_t MonotoneCoverFamily::find_shift(std::size_t k, std::size_t i,
                                            std::size_t j) {
  // Fix digits least significant first; adding m*4^d never disturbs digits
  // below d, and any carry only touches digits handled later.
  std::size_t delta = 0;
  for (std::size_t d = 0; d < k; ++d) {
    const std::size_t di = base4_digit(i + delta, d);
    const std::size_t dj = base4_digit(j + delta, d);
    for (std::size_t m = 0; m < 3; ++m)
      if ((di + m) % 4 != 0 && (dj + m) % 4 != 0) {
        delta += m * pow4(d);
        break;
      }
  }
  return delta;
}

}  // namespace lcekit
