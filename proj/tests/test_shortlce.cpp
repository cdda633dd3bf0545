#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "lcekit/covers.hpp"
#include "lcekit/oracle.hpp"
#include "lcekit/shortlce.hpp"
#include "lcekit/text.hpp"
#include "lcekit/textgen.hpp"

namespace {

using namespace lcekit;

// A position extends against itself forever (any symbol, sentinel included,
// equals itself), so identity queries saturate the cap.  Everything else is
// the capped naive answer.
std::size_t expected_short(const Text& text, std::size_t i, std::size_t j,
                           std::size_t cap) {
  if (i == j) return cap;
  return std::min(naive_lce(text.symbols(), i, j), cap);
}

// Groups the universe of `forest` by root without disturbing its counters.
std::map<std::size_t, std::vector<std::size_t>> classes_of(DsuForest forest) {
  std::map<std::size_t, std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < forest.size(); ++x) out[forest.find(x)].push_back(x);
  return out;
}

}  // namespace

TEST_CASE("pow2 short_lce on small fixed texts") {
  Text text = Text::from_bytes("aabaab", Mode::ordered);
  Pow2Engine eng(text, 3);

  CHECK(eng.short_lce(2, 1, 4) == 3);
  CHECK(eng.short_lce(1, 1, 4) == 2);
  CHECK(eng.short_lce(0, 1, 4) == 1);
  CHECK(eng.short_lce(0, 1, 3) == 0);
  CHECK(eng.short_lce(3, 1, 4) == 3);
  CHECK(eng.short_lce(2, 4, 1) == 3);

  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t i = 1; i <= 6; ++i)
      CHECK(eng.short_lce(k, i, i) == (std::size_t{1} << k));
}

TEST_CASE("pow2 short_lce repeat costs nothing after a capped match") {
  Text text(std::vector<std::uint32_t>(64, 1), Mode::ordered);
  Pow2Engine eng(text, 3);

  CHECK(eng.short_lce(3, 1, 2) == 8);
  std::uint64_t before = text.stats().symbol_comparisons();
  CHECK(eng.short_lce(3, 1, 2) == 8);
  CHECK(text.stats().symbol_comparisons() == before);
}

TEST_CASE("pow2 short_lce equals the capped oracle") {
  for (std::uint32_t sigma : {2u, 4u}) {
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{17},
                          std::size_t{64}}) {
      Text text(random_text(n, sigma, 1000 + n + sigma), Mode::ordered);
      Pow2Engine eng(text, 7);
      for (std::size_t k = 0; k <= 7; ++k)
        for (std::size_t i = 1; i <= n; ++i)
          for (std::size_t j = 1; j <= n; ++j) {
            std::size_t cap = std::size_t{1} << k;
            REQUIRE(eng.short_lce(k, i, j) == expected_short(text, i, j, cap));
          }
    }
  }
}

TEST_CASE("pow2 forests only merge equal blocks") {
  std::size_t n = 96;
  Text text(periodic_text(n, 7, 3, 11), Mode::ordered);
  Pow2Engine eng(text, 5);
  for (std::size_t k = 0; k <= 5; ++k)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; j += 3) eng.short_lce(k, i, j);

  for (std::size_t k = 1; k <= 5; ++k) {
    std::size_t cap = std::size_t{1} << k;
    for (const auto& [root, members] : classes_of(eng.full_forest(k))) {
      for (std::size_t m : members)
        if (m != members.front())
          REQUIRE(naive_lce(text.symbols(), members.front() + 1, m + 1) >= cap);
    }
  }
}

TEST_CASE("pow2 sparse variant answers only on the cover") {
  std::size_t n = 96;
  Text text(random_text(n, 2, 5), Mode::ordered);
  Pow2Engine eng(text, 6);

  for (std::size_t ks : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
    TCover cover(std::size_t{1} << ks, n);
    for (std::size_t k = ks; k <= 6; k += 2)
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
          auto got = eng.sparse_short_lce(k, ks, i, j);
          if (cover.member(i) && cover.member(j)) {
            REQUIRE(got.has_value());
            std::size_t cap = std::size_t{1} << k;
            REQUIRE(*got == expected_short(text, i, j, cap));
          } else {
            REQUIRE(!got.has_value());
          }
        }
  }
}

TEST_CASE("pow2 short_lce_fast on fixed texts") {
  Text ab = Text::from_bytes("ab", Mode::ordered);
  Pow2Engine eng_ab(ab, 1);
  CHECK(eng_ab.short_lce_fast(1, 0, 1, 2) == 0);

  std::vector<std::uint32_t> alt;
  for (std::size_t r = 0; r < 16; ++r) {
    alt.push_back('a');
    alt.push_back('b');
  }
  Text text(alt, Mode::ordered);
  Pow2Engine eng(text, 5);
  CHECK(eng.short_lce_fast(5, 2, 1, 3) == 30);
  CHECK(eng.short_lce_fast(5, 1, 3) == 30);
}

TEST_CASE("pow2 short_lce_fast equals the plain recursion") {
  std::size_t n = 256;
  Text text(random_text(n, 2, 77), Mode::ordered);
  Pow2Engine eng(text, 8);
  const std::size_t combos[][2] = {{4, 2}, {6, 2}, {6, 3}, {8, 4}};
  for (auto [k, ks] : combos)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        std::size_t cap = std::size_t{1} << k;
        REQUIRE(eng.short_lce_fast(k, ks, i, j) ==
                expected_short(text, i, j, cap));
      }
}

TEST_CASE("base4 sparse recursion on cover positions") {
  std::size_t n = 96;
  Text text(random_text(n, 2, 21), Mode::ordered);
  MonotoneCoverFamily family(n, 4);
  Base4Engine eng(text, family);

  for (std::size_t k = 0; k <= 4; ++k) {
    std::size_t cap = pow4(k);
    const auto& members = family.level(k).members;
    for (std::size_t i : members)
      for (std::size_t j : members) {
        auto got = eng.sparse_short_lce(k, i, j);
        REQUIRE(got.has_value());
        REQUIRE(*got == expected_short(text, i, j, cap));
      }
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (!MonotoneCoverFamily::member(k, i) ||
            !MonotoneCoverFamily::member(k, j))
          REQUIRE(!eng.sparse_short_lce(k, i, j).has_value());
  }
}

TEST_CASE("base4 sparse repeat costs nothing after a capped match") {
  Text text(std::vector<std::uint32_t>(80, 3), Mode::ordered);
  MonotoneCoverFamily family(80, 2);
  Base4Engine eng(text, family);

  // 21 and 5 both lie in S(16); the all-equal text matches for a full block.
  REQUIRE(eng.sparse_short_lce(2, 21, 5) == 16);
  std::uint64_t before = text.stats().symbol_comparisons();
  REQUIRE(eng.sparse_short_lce(2, 21, 5) == 16);
  CHECK(text.stats().symbol_comparisons() == before);
  CHECK(eng.sparse_short_lce(2, 21, 21) == 16);
}

TEST_CASE("base4 short_lce equals the capped oracle") {
  std::vector<std::vector<std::uint32_t>> inputs;
  inputs.push_back(random_text(48, 2, 9));
  inputs.push_back(random_text(256, 2, 10));
  inputs.push_back(periodic_text(192, 3, 4, 12));

  for (const auto& symbols : inputs) {
    std::size_t n = symbols.size();
    Text text(symbols, Mode::ordered);
    MonotoneCoverFamily family(n, 4);
    Base4Engine eng(text, family);
    for (std::size_t k = 0; k <= 4; ++k)
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
          REQUIRE(eng.short_lce(k, i, j) ==
                  expected_short(text, i, j, pow4(k)));

    for (std::size_t k = 1; k <= 4; ++k) {
      const auto& members = family.level(k).members;
      std::size_t cap = pow4(k);
      for (const auto& [root, ranks] : classes_of(eng.level_forest(k))) {
        for (std::size_t r : ranks)
          if (r != ranks.front())
            REQUIRE(naive_lce(text.symbols(), members[ranks.front()],
                              members[r]) >= cap);
      }
    }

    std::uint64_t total_unions = 0;
    for (std::size_t k = 0; k <= 4; ++k) {
      CHECK(eng.level_unions(k) <= std::max<std::size_t>(
                                       1, family.level(k).members.size()));
      total_unions += eng.level_unions(k);
    }
    CHECK(total_unions <= 4 * n);
  }
}

TEST_CASE("base4 and pow2 engines agree on shared caps") {
  std::size_t n = 64;
  Text t1(random_text(n, 2, 31), Mode::ordered);
  Text t2(random_text(n, 2, 31), Mode::ordered);
  MonotoneCoverFamily family(n, 3);
  Base4Engine b4(t1, family);
  Pow2Engine p2(t2, 6);
  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        REQUIRE(b4.short_lce(k, i, j) == p2.short_lce(2 * k, i, j));
}

TEST_CASE("base4 climb shifts through the cover levels") {
  // Period-267 text, so positions 284 = (10130) base 4 and 17 = (00101)
  // base 4 match for 417 symbols, past the level-4 cap of 256.  The climb
  // must fix digits bottom-up: one step at level 0, two at level 1, none at
  // level 2, one at level 3, then the final level-4 call at offset 73.
  std::size_t n = 700;
  Text text(periodic_text(n, 267, 26, 42), Mode::ordered);
  REQUIRE(naive_lce(text.symbols(), 284, 17) == 417);

  MonotoneCoverFamily family(n, 4);
  Base4Engine eng(text, family);
  std::vector<Base4Engine::ClimbStep> steps;
  eng.set_trace(&steps);
  CHECK(eng.short_lce(4, 284, 17) == 256);
  eng.set_trace(nullptr);

  REQUIRE(steps.size() == 5);
  const std::size_t levels[] = {0, 1, 1, 3, 4};
  const std::size_t deltas[] = {0, 1, 5, 9, 73};
  for (std::size_t s = 0; s < 5; ++s) {
    CHECK(steps[s].level == levels[s]);
    CHECK(steps[s].delta_before == deltas[s]);
    CHECK(steps[s].final_call == (s == 4));
    CHECK(steps[s].level != 2);
  }

  std::uint64_t before = text.stats().symbol_comparisons();
  CHECK(eng.short_lce(4, 284, 17) == 256);
  CHECK(text.stats().symbol_comparisons() == before);
}
