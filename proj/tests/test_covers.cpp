#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lcekit/covers.hpp"

using namespace lcekit;

TEST_CASE("constructed difference covers cover all residues") {
  for (std::size_t t = 1; t <= 600; ++t) {
    const DifferenceCover dc = build_difference_cover(t);
    CHECK(dc.modulus == t);
    CHECK(verify_difference_cover(t, dc.residues));
    std::size_t r = 1;
    while (r * r < t) ++r;
    CHECK(dc.residues.size() <= 2 * r + 2);
  }
}

TEST_CASE("verify_difference_cover rejects gaps") {
  CHECK(verify_difference_cover(6, {2, 3, 5}));
  CHECK_FALSE(verify_difference_cover(6, {0, 1}));  // difference 3 missing
  CHECK_FALSE(verify_difference_cover(6, {2, 3, 9}));
  CHECK_FALSE(verify_difference_cover(0, {}));
  CHECK(verify_difference_cover(1, {0}));
}

TEST_CASE("build_difference_cover rejects t = 0") {
  CHECK_THROWS_AS(build_difference_cover(0), std::invalid_argument);
}

TEST_CASE("6-cover with residues {2, 3, 5}") {
  TCover cover(6, 20, DifferenceCover{6, {2, 3, 5}});
  const std::set<std::size_t> members(cover.members().begin(),
                                      cover.members().end());
  const std::set<std::size_t> expected{2, 3, 5, 8, 9, 11, 14, 15, 17, 20};
  CHECK(members == expected);

  // shift by residue difference: h(3, 10) lands both on the cover
  CHECK(cover.shift(3, 10) == 5);
  CHECK(cover.member(3 + 5));
  CHECK(cover.member(10 + 5));
}

TEST_CASE("shift lands any pair on the cover, below t") {
  for (std::size_t t : {1u, 2u, 3u, 6u, 7u, 16u, 25u}) {
    TCover cover(t, 6 * t);
    for (std::size_t i = 1; i <= 2 * t; ++i)
      for (std::size_t j = 1; j <= 2 * t; ++j) {
        const std::size_t h = cover.shift(i, j);
        CHECK(h < t);
        CHECK(cover.member(i + h));
        CHECK(cover.member(j + h));
      }
  }
}

TEST_CASE("t-cover membership is a residue test clipped to the text") {
  TCover cover(4, 30);
  for (std::size_t pos = 1; pos <= 30; ++pos) {
    bool in_d = false;
    for (std::size_t d : cover.cover().residues) in_d |= pos % 4 == d;
    CHECK(cover.member(pos) == in_d);
  }
  CHECK_FALSE(cover.member(0));
  CHECK_FALSE(cover.member(31));  // beyond the text
}

TEST_CASE("t-cover ranks are dense and match the member list") {
  TCover cover(9, 100);
  const auto& members = cover.members();
  for (std::size_t r = 0; r < members.size(); ++r)
    CHECK(cover.rank(members[r]) == r);
  CHECK(cover.rank(101) == TCover::npos);
}

TEST_CASE("t-cover rejects degenerate sizes") {
  CHECK_THROWS_AS(TCover(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(TCover(8, 5), std::invalid_argument);  // t > n
  CHECK_THROWS_AS(TCover(6, 20, DifferenceCover{6, {0, 1}}),
                  std::invalid_argument);
}

TEST_CASE("monotone membership is the base-4 digit rule") {
  CHECK(MonotoneCoverFamily::member(0, 1));
  CHECK(MonotoneCoverFamily::member(0, 4));
  CHECK(MonotoneCoverFamily::member(1, 3));
  CHECK_FALSE(MonotoneCoverFamily::member(1, 4));
  CHECK(MonotoneCoverFamily::member(2, 5));    // (11)_4
  CHECK_FALSE(MonotoneCoverFamily::member(2, 16));  // (100)_4
  CHECK(MonotoneCoverFamily::member(2, 21));   // (111)_4
  CHECK_FALSE(MonotoneCoverFamily::member(1, 0));
}

TEST_CASE("monotone levels nest and are 4^k-periodic") {
  const std::size_t n = 1200;
  for (std::size_t k = 1; k <= 5; ++k)
    for (std::size_t pos = 1; pos <= n; ++pos) {
      if (MonotoneCoverFamily::member(k, pos))
        CHECK(MonotoneCoverFamily::member(k - 1, pos));
      CHECK(MonotoneCoverFamily::member(k, pos) ==
            MonotoneCoverFamily::member(k, pos + pow4(k)));
    }
}

TEST_CASE("monotone level density is at most (3/4)^k") {
  MonotoneCoverFamily family(4096, 6);
  for (std::size_t k = 0; k <= 6; ++k) {
    std::size_t expected = 4096;
    for (std::size_t d = 0; d < k; ++d) expected = expected * 3 / 4;
    CHECK(family.level(k).members.size() <= expected);
  }
}

TEST_CASE("level views expose dense ranks") {
  MonotoneCoverFamily family(100, 2);
  const auto& lv = family.level(2);
  CHECK(lv.block_len == 16);
  for (std::size_t r = 0; r < lv.members.size(); ++r)
    CHECK(lv.rank[lv.members[r]] == r);
  for (std::size_t pos = 1; pos <= 100; ++pos)
    CHECK((lv.rank[pos] != MonotoneCoverFamily::npos) ==
          MonotoneCoverFamily::member(2, pos));
}

TEST_CASE("monotone_shift picks the smallest workable multiple") {
  // digit 1 of 17 is 0 (excludes 0), digit 1 of 9 is 2 (excludes 2)
  CHECK(MonotoneCoverFamily::monotone_shift(1, 17, 9) == 4);
  CHECK(MonotoneCoverFamily::member(2, 17 + 4));
  CHECK(MonotoneCoverFamily::member(2, 9 + 4));
  // digit 0 of 3 excludes 1, digit 0 of 4 excludes 0, so 2 remains
  CHECK(MonotoneCoverFamily::monotone_shift(0, 3, 4) == 2);
  CHECK(MonotoneCoverFamily::monotone_shift(1, 5, 7) == 0);
  CHECK_THROWS_AS(MonotoneCoverFamily::monotone_shift(1, 4, 5),
                  std::invalid_argument);
}

TEST_CASE("monotone_shift stays within the next cover exhaustively") {
  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t i = 1; i <= 600; ++i) {
      if (!MonotoneCoverFamily::member(k, i)) continue;
      for (std::size_t j = 1; j <= 600; ++j) {
        if (!MonotoneCoverFamily::member(k, j)) continue;
        const std::size_t d = MonotoneCoverFamily::monotone_shift(k, i, j);
        CHECK(d <= 2 * pow4(k));
        CHECK(d % pow4(k) == 0);
        CHECK(MonotoneCoverFamily::member(k + 1, i + d));
        CHECK(MonotoneCoverFamily::member(k + 1, j + d));
      }
    }
}

TEST_CASE("find_shift lands arbitrary pairs on the cover") {
  for (std::size_t k = 0; k <= 4; ++k)
    for (std::size_t i = 1; i <= 300; ++i)
      for (std::size_t j = 1; j <= 300; j += 3) {
        const std::size_t d = MonotoneCoverFamily::find_shift(k, i, j);
        CHECK(d <= pow4(k));
        CHECK(MonotoneCoverFamily::member(k, i + d));
        CHECK(MonotoneCoverFamily::member(k, j + d));
      }
}
