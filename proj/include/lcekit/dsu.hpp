#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lcekit {

// Union-find over a fixed universe [0, size) with union by rank and full
// path compression.  Every find/union call and every parent-pointer hop is
// counted; the counters back the memoization budget checks elsewhere.
class DsuForest {
 public:
  struct Stats {
    std::uint64_t finds = 0;
    std::uint64_t unions = 0;       // merges that joined two distinct classes
    std::uint64_t parent_hops = 0;  // parent links walked before compression
  };

  explicit DsuForest(std::size_t size);

  std::size_t size() const { return parent_.size(); }
  std::size_t find(std::size_t x);
  void unite(std::size_t x, std::size_t y);
  bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }
  std::size_t class_count() const { return classes_; }

  const Stats& stats() const { return stats_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t classes_ = 0;
  Stats stats_;
};

}  // namespace lcekit
