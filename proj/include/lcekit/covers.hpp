#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace lcekit {

// Residue set D within [0, t) such that every residue mod t is a difference
// of two elements of D.
struct DifferenceCover {
  std::size_t modulus = 0;
  std::vector<std::size_t> residues;  // sorted, unique
};

// Classical construction of size at most 2*ceil(sqrt(t)) + 2.
DifferenceCover build_difference_cover(std::size_t t);

// Checks the covering property by brute force.
bool verify_difference_cover(std::size_t t,
                             const std::vector<std::size_t>& residues);

// Position set S(t) = {i >= 1 : i mod t in D} restricted to [1, n], together
// with a shift function h: for any i, j the offset h = shift(i, j) < t
// satisfies i + h in S(t) and j + h in S(t).  h depends only on the residues
// of i and j, via a witness table indexed by (j - i) mod t.
class TCover {
 public:
  TCover(std::size_t t, std::size_t n);
  TCover(std::size_t t, std::size_t n, DifferenceCover cover);

  std::size_t t() const { return t_; }
  std::size_t n() const { return n_; }
  const DifferenceCover& cover() const { return cover_; }

  bool member(std::size_t pos) const {
    return pos >= 1 && pos <= n_ && in_cover_[pos % t_];
  }
  std::size_t shift(std::size_t i, std::size_t j) const;

  const std::vector<std::size_t>& members() const { return members_; }

  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();
  // Dense index of pos within members(), npos if absent.
  std::uint32_t rank(std::size_t pos) const {
    return pos <= n_ ? rank_[pos] : npos;
  }

 private:
  void init();

  std::size_t t_;
  std::size_t n_;
  DifferenceCover cover_;
  std::vector<std::uint8_t> in_cover_;       // by residue
  std::vector<std::size_t> shift_witness_;   // by residue difference
  std::vector<std::size_t> members_;
  std::vector<std::uint32_t> rank_;          // size n + 1
};

// Nested covers S(4^k) = {i >= 1 : none of the k low base-4 digits of i is
// zero}.  Level 0 is every position.  The per-level member lists and dense
// ranks over [1, n] are materialized lazily.
class MonotoneCoverFamily {
 public:
  struct Level {
    std::size_t block_len = 0;  // 4^k
    std::vector<std::size_t> members;
    std::vector<std::uint32_t> rank;  // size n + 1, npos if absent
  };

  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

  MonotoneCoverFamily(std::size_t n, std::size_t max_level);

  std::size_t n() const { return n_; }
  std::size_t max_level() const { return levels_.size() - 1; }
  const Level& level(std::size_t k);

  static bool member(std::size_t k, std::size_t pos);

  // Smallest d in {0, 4^k, 2*4^k} with pos + d in S(4^{k+1}); pos must be in
  // S(4^k).  At most one of the three candidates is excluded per argument.
  static std::size_t monotone_shift(std::size_t k, std::size_t i, std::size_t j);

  // Offset d <= 4^k with i + d and j + d in S(4^k), fixing digits from the
  // least significant upward.
  static std::size_t find_shift(std::size_t k, std::size_t i, std::size_t j);

 private:
  std::size_t n_;
  std::vector<Level> levels_;
  std::vector<bool> built_;
};

inline std::size_t base4_digit(std::size_t value, std::size_t index) {
  return (value >> (2 * index)) & std::size_t{3};
}

inline std::size_t pow4(std::size_t k) { return std::size_t{1} << (2 * k); }

}  // namespace lcekit
