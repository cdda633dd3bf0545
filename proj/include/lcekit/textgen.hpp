#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lcekit {

// Deterministic input families for benchmarks and stress tests; symbols are
// small positive integers.
std::vector<std::uint32_t> random_text(std::size_t n, std::uint32_t sigma,
                                       std::uint64_t seed);
std::vector<std::uint32_t> periodic_text(std::size_t n, std::size_t period,
                                         std::uint32_t sigma,
                                         std::uint64_t seed);
std::vector<std::uint32_t> fibonacci_text(std::size_t n);
std::vector<std::uint32_t> thue_morse_text(std::size_t n);

// Family by name; throws on unknown names.
std::vector<std::uint32_t> generate_family(const std::string& family,
                                           std::size_t n, std::uint32_t sigma,
                                           std::size_t period,
                                           std::uint64_t seed);

}  // namespace lcekit
