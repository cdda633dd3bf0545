#pragma once

#include <cstddef>
#include <tuple>

namespace lcekit {

// Maximal periodic fragment [start, end] (1-based, inclusive) with minimal
// period `period`; end - start + 1 >= 2 * period.
struct Run {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t period = 0;

  friend bool operator==(const Run&, const Run&) = default;
  friend bool operator<(const Run& a, const Run& b) {
    return std::tie(a.start, a.end, a.period) <
           std::tie(b.start, b.end, b.period);
  }
};

}  // namespace lcekit
