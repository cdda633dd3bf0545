#include "lcekit/text.hpp"

#include <stdexcept>

namespace lcekit {

Text::Text(std::vector<std::uint32_t> symbols, Mode mode)
    : symbols_(std::move(symbols)), mode_(mode), memo_(symbols_.size()) {
  if (symbols_.empty()) throw std::invalid_argument("Text: empty text");
}

Text Text::from_bytes(std::string_view bytes, Mode mode) {
  std::vector<std::uint32_t> symbols;
  symbols.reserve(bytes.size());
  for (unsigned char c : bytes) symbols.push_back(c);
  return Text(std::move(symbols), mode);
}

std::strong_ordering Text::compare(std::size_t i, std::size_t j) {
  if (mode_ != Mode::ordered)
    throw std::logic_error("Text::compare: order queries need ordered mode");
  if (i == 0 || j == 0) throw std::out_of_range("Text::compare");
  const std::size_t n = size();
  const bool ri = i <= n, rj = j <= n;
  if (ri && rj) {
    ++stats_.order_comparisons;
    return at(i) <=> at(j);
  }
  // Sentinel positions resolve by rule, without a symbol comparison.
  if (!ri && !rj) return i <=> j;
  return ri ? std::strong_ordering::greater : std::strong_ordering::less;
}

bool Text::eq(std::size_t i, std::size_t j) {
  if (i == 0 || j == 0) throw std::out_of_range("Text::eq");
  if (i == j) return true;
  const std::size_t n = size();
  if (i > n || j > n) return false;  // sentinels are unique
  ++stats_.equality_tests;
  return at(i) == at(j);
}

bool Text::memo_eq(std::size_t i, std::size_t j) {
  const std::size_t n = size();
  if (i == 0 || j == 0 || i > n || j > n)
    throw std::out_of_range("Text::memo_eq");
  if (memo_.find(i - 1) == memo_.find(j - 1)) {
    ++stats_.memo_hits;
    return true;
  }
  ++stats_.equality_tests;
  if (at(i) == at(j)) {
    memo_.unite(i - 1, j - 1);
    return true;
  }
  return false;
}

}  // namespace lcekit
