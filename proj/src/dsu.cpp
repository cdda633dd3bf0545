#include "lcekit/dsu.hpp"

#include <limits>
#include <stdexcept>

namespace lcekit {

DsuForest::DsuForest(std::size_t size) : classes_(size) {
  if (size >= std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("DsuForest: universe too large");
  parent_.resize(size);
  rank_.assign(size, 0);
  for (std::size_t i = 0; i < size; ++i)
    parent_[i] = static_cast<std::uint32_t>(i);
}

std::size_t DsuForest::find(std::size_t x) {
  if (x >= parent_.size()) throw std::out_of_range("DsuForest::find");
  ++stats_.finds;
  std::uint32_t root = static_cast<std::uint32_t>(x);
  while (parent_[root] != root) {
    root = parent_[root];
    ++stats_.parent_hops;
  }
  std::uint32_t cur = static_cast<std::uint32_t>(x);
  while (parent_[cur] != root) {
    std::uint32_t next = parent_[cur];
    parent_[cur] = root;
    cur = next;
  }
  return root;
}

void DsuForest::unite(std::size_t x, std::size_t y) {
  std::uint32_t a = static_cast<std::uint32_t>(find(x));
  std::uint32_t b = static_cast<std::uint32_t>(find(y));
  if (a == b) return;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  ++stats_.unions;
  --classes_;
}

}  // namespace lcekit
