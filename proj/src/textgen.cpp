#include "lcekit/textgen.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace lcekit {

std::vector<std::uint32_t> random_text(std::size_t n, std::uint32_t sigma,
                                       std::uint64_t seed) {
  if (n == 0 || sigma == 0) throw std::invalid_argument("random_text");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(1, sigma);
  std::vector<std::uint32_t> out(n);
  for (auto& v : out) v = pick(rng);
  return out;
}

std::vector<std::uint32_t> periodic_text(std::size_t n, std::size_t period,
                                         std::uint32_t sigma,
                                         std::uint64_t seed) {
  if (n == 0 || period == 0) throw std::invalid_argument("periodic_text");
  const std::vector<std::uint32_t> block =
      random_text(std::min(period, n), sigma, seed);
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = block[i % block.size()];
  return out;
}

std::vector<std::uint32_t> fibonacci_text(std::size_t n) {
  if (n == 0) throw std::invalid_argument("fibonacci_text");
  // Iterate the morphism 1 -> 12, 2 -> 1 from "1".
  std::vector<std::uint32_t> word{1};
  while (word.size() < n) {
    std::vector<std::uint32_t> next;
    next.reserve(2 * word.size());
    for (std::uint32_t s : word) {
      if (s == 1) {
        next.push_back(1);
        next.push_back(2);
      } else {
        next.push_back(1);
      }
    }
    word = std::move(next);
  }
  word.resize(n);
  return word;
}

std::vector<std::uint32_t> thue_morse_text(std::size_t n) {
  if (n == 0) throw std::invalid_argument("thue_morse_text");
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = 1 + (std::popcount(i) & 1);
  return out;
}

std::vector<std::uint32_t> generate_family(const std::string& family,
                                           std::size_t n, std::uint32_t sigma,
                                           std::size_t period,
                                           std::uint64_t seed) {
  if (family == "random") return random_text(n, sigma, seed);
  if (family == "periodic") return periodic_text(n, period, sigma, seed);
  if (family == "fibonacci") return fibonacci_text(n);
  if (family == "thue-morse") return thue_morse_text(n);
  throw std::invalid_argument("generate_family: unknown family " + family);
}

}  // namespace lcekit
