#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lcekit/run.hpp"

namespace lcekit {

// Definition-level reference implementations.  They share the sentinel rules
// of Text (positions beyond n are unique, smaller than real symbols, ordered
// by position) but none of its machinery, so the optimized structures can be
// checked against them.

// Length of the longest common prefix of the suffixes at i and j (1-based).
// If `comparisons` is given, it is incremented once per real symbol pair
// inspected.
std::size_t naive_lce(std::span<const std::uint32_t> symbols, std::size_t i,
                      std::size_t j, std::uint64_t* comparisons = nullptr);

// All runs of the text by direct periodicity scanning, sorted by
// (start, end, period).
std::vector<Run> naive_runs(std::span<const std::uint32_t> symbols);

// Order of the length-t fragments starting at p and q under the sentinel
// rules.
std::strong_ordering naive_block_order(std::span<const std::uint32_t> symbols,
                                       std::size_t t, std::size_t p,
                                       std::size_t q);

}  // namespace lcekit
