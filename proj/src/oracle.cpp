#include "lcekit/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcekit {

std::size_t naive_lce(std::span<const std::uint32_t> symbols, std::size_t i,
                      std::size_t j, std::uint64_t* comparisons) {
  const std::size_t n = symbols.size();
  if (i == 0 || j == 0) throw std::out_of_range("naive_lce");
  if (i == j) return i <= n ? n - i + 1 : 0;
  std::size_t len = 0;
  while (i + len <= n && j + len <= n) {
    if (comparisons) ++*comparisons;
    if (symbols[i + len - 1] != symbols[j + len - 1]) break;
    ++len;
  }
  return len;  // a sentinel mismatch ends the scan for free
}

namespace {

bool has_period(std::span<const std::uint32_t> w, std::size_t a, std::size_t b,
                std::size_t q) {
  for (std::size_t x = a; x + q <= b; ++x)
    if (w[x - 1] != w[x + q - 1]) return false;
  return true;
}

// p is minimal for [a, b] iff no quotient by a prime factor is a period;
// any smaller period of a fragment of length >= 2p divides p.
bool minimal_period(std::span<const std::uint32_t> w, std::size_t a,
                    std::size_t b, std::size_t p) {
  std::size_t rest = p;
  for (std::size_t f = 2; f * f <= rest; ++f) {
    if (rest % f != 0) continue;
    if (has_period(w, a, b, p / f)) return false;
    while (rest % f == 0) rest /= f;
  }
  if (rest > 1 && has_period(w, a, b, p / rest)) return false;
  return true;
}

}  // namespace

std::vector<Run> naive_runs(std::span<const std::uint32_t> symbols) {
  const std::size_t n = symbols.size();
  std::vector<Run> out;
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    std::size_t x = 1;
    while (x + p <= n) {
      if (symbols[x - 1] != symbols[x + p - 1]) {
        ++x;
        continue;
      }
      std::size_t b = x;
      while (b + 1 + p <= n && symbols[b] == symbols[b + p]) ++b;
      // fragment [x, b + p] is p-periodic and cannot be extended
      if (b - x + 1 >= p && minimal_period(symbols, x, b + p, p))
        out.push_back({x, b + p, p});
      x = b + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering naive_block_order(std::span<const std::uint32_t> symbols,
                                       std::size_t t, std::size_t p,
                                       std::size_t q) {
  const std::size_t n = symbols.size();
  if (t == 0 || p == 0 || q == 0) throw std::out_of_range("naive_block_order");
  for (std::size_t o = 0; o < t; ++o) {
    const std::size_t i = p + o, j = q + o;
    const bool ri = i <= n, rj = j <= n;
    if (ri && rj) {
      if (symbols[i - 1] != symbols[j - 1])
        return symbols[i - 1] <=> symbols[j - 1];
    } else if (ri != rj) {
      return ri ? std::strong_ordering::greater : std::strong_ordering::less;
    } else if (i != j) {
      return i <=> j;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace lcekit
