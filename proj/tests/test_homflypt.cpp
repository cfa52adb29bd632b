#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "braidmfw/constructions.hpp"
#include "braidmfw/homflypt.hpp"
#include "test_support.hpp"

using namespace braidmfw;

namespace {

const LaurentPoly2 kV = v_pow(1), kZ = z_pow(1);

// Oracle value for the left-handed trefoil AAA.
LaurentPoly2 left_trefoil() { return LaurentPoly2(-1) * v_pow(-4) + v_pow(-2) * z_pow(2) + LaurentPoly2(2) * v_pow(-2); }

LaurentPoly2 lhs_skein(HomflyCalculator& calc, const SkeinTriple& t) {
  return v_pow(-1) * calc.homfly(t.plus) - kV * calc.homfly(t.minus);
}

} // namespace

TEST(Homfly, NormalizationAndUnlinks) {
  HomflyCalculator calc;
  EXPECT_EQ(calc.homfly(BraidWord(1)), LaurentPoly2(1));
  EXPECT_EQ(calc.homfly(BraidWord(2)), (v_pow(-1) - kV) * z_pow(-1));
  EXPECT_EQ(calc.homfly(BraidWord(4)), unlink_delta().pow(3));
  EXPECT_EQ(calc.homfly(parse_word("a")), LaurentPoly2(1));
  EXPECT_EQ(calc.homfly(parse_word("AbC")), LaurentPoly2(1));
}

TEST(Homfly, TrefoilsAndMirrors) {
  HomflyCalculator calc;
  EXPECT_EQ(calc.homfly(parse_word("AAA")), left_trefoil());
  EXPECT_EQ(calc.homfly(parse_word("aaa")), mirror_homfly(left_trefoil()));
  EXPECT_EQ(calc.homfly_degrees(parse_word("aaa")), std::make_pair(2, 4));
  EXPECT_EQ(calc.homfly_degrees(parse_word("AAA")), std::make_pair(-4, -2));
  EXPECT_EQ(calc.homfly_degrees(BraidWord(1)), std::make_pair(0, 0));
}

TEST(Homfly, FigureEightIsAmphichiral) {
  HomflyCalculator calc;
  const BraidWord w = parse_word("aBaB");
  const auto p = calc.homfly(w);
  EXPECT_EQ(p, mirror_homfly(p));
  EXPECT_EQ(p, v_pow(-2) - LaurentPoly2(1) + v_pow(2) - z_pow(2));
}

TEST(Homfly, NineFortyTwoSpanGivesLowerBoundThree) {
  HomflyCalculator calc;
  const auto [dm, dp] = calc.homfly_degrees(parse_word("aaacBAAcB"));
  EXPECT_EQ((dp - dm) / 2 + 1, 3);
}

TEST(Homfly, MirrorWordNegatesDegrees) {
  HomflyCalculator calc;
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const BraidWord w = testutil::random_word(rng, 4, 1, 10);
    const auto [dm, dp] = calc.homfly_degrees(w);
    EXPECT_EQ(calc.homfly_degrees(mirror(w)), std::make_pair(-dp, -dm));
    EXPECT_EQ(calc.homfly(mirror(w)), mirror_homfly(calc.homfly(w)));
  }
}

TEST(Homfly, EnginesAgreeBitExactly) {
  HomflyCalculator calc;
  std::mt19937 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    const BraidWord w = testutil::random_word(rng, 2 + trial % 4, 0, 14);
    EXPECT_EQ(calc.homfly_uncached(w, Engine::Reference), calc.homfly_uncached(w, Engine::Hecke)) << to_text(w);
  }
}

TEST(Homfly, SkeinRelationOnRandomTriples) {
  HomflyCalculator calc;
  std::mt19937 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w = testutil::random_word(rng, 2 + trial % 5, 1, 14);
    const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, w.length() - 1)(rng);
    const auto t = skein_triple(w, pos);
    EXPECT_EQ(lhs_skein(calc, t), kZ * calc.homfly(t.zero)) << to_text(w) << " @" << pos;
    ++checked;
  }
  EXPECT_EQ(checked, 200);
}

TEST(Homfly, MarkovInvarianceOnRandomMoves) {
  HomflyCalculator calc;
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w = testutil::random_word(rng, 2 + trial % 4, 0, 12);
    const auto p = calc.homfly(w);
    BraidWord moved(1);
    switch (trial % 5) {
      case 0: moved = conjugate(w, 1 + trial % (w.strands() - 1), trial % 2 ? 1 : -1); break;
      case 1: moved = cyclic_shift(w, trial); break;
      case 2: moved = stabilize(w, 1); break;
      case 3: moved = stabilize(w, -1); break;
      default: moved = concat(w, concat(BraidWord(w.strands(), {{1, 1}}), BraidWord(w.strands(), {{1, -1}}))); break;
    }
    EXPECT_EQ(calc.homfly_uncached(moved, Engine::Hecke), p) << to_text(w) << " move " << trial % 5;
  }
}

TEST(Homfly, SplitUnionWithUnknotMultipliesByDelta) {
  HomflyCalculator calc;
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const BraidWord w = testutil::random_word(rng, 3, 1, 10);
    EXPECT_EQ(calc.homfly(with_strands(w, 4)), unlink_delta() * calc.homfly(w));
  }
}

TEST(Homfly, ConnectSumIsMultiplicative) {
  HomflyCalculator calc;
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const BraidWord a = testutil::random_knot(rng, 2 + trial % 3, 1, 8);
    const BraidWord b = testutil::random_knot(rng, 2 + (trial / 3) % 3, 1, 8);
    const BraidWord s = connect_sum(a, b);
    EXPECT_EQ(calc.homfly(s), calc.homfly(a) * calc.homfly(b));
    EXPECT_EQ(exponent_sum(s), exponent_sum(a) + exponent_sum(b));
    EXPECT_EQ(s.strands(), a.strands() + b.strands() - 1);
  }
}

TEST(Homfly, DegreeInequalitiesOnSkeinTriples) {
  HomflyCalculator calc;
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord w = testutil::random_word(rng, 2 + trial % 4, 1, 12);
    const auto t = skein_triple(w, std::uniform_int_distribution<std::size_t>(0, w.length() - 1)(rng));
    const auto [mp, pp] = calc.homfly_degrees(t.plus);
    const auto [mm, pm] = calc.homfly_degrees(t.minus);
    const auto [m0, p0] = calc.homfly_degrees(t.zero);
    EXPECT_LE(pp, std::max(pm + 2, p0 + 1));
    EXPECT_LE(pm, std::max(pp - 2, p0 - 1));
    EXPECT_LE(p0, std::max(pp - 1, pm + 1));
    EXPECT_GE(mp, std::min(mm + 2, m0 + 1));
    EXPECT_GE(mm, std::min(mp - 2, m0 - 1));
    EXPECT_GE(m0, std::min(mp - 1, mm + 1));
  }
}

TEST(Homfly, InequalityAssertedOnEveryCall) {
  HomflyCalculator calc;
  std::mt19937 rng(1);
  for (int trial = 0; trial < 60; ++trial) calc.homfly(testutil::random_word(rng, 2 + trial % 5, 0, 16));
  EXPECT_GE(calc.mfw_checks(), 60u);
  EXPECT_EQ(calc.mfw_violations(), 0u);
}

TEST(Homfly, LimitsAreEnforced) {
  HomflyCalculator calc(HomflyConfig{4, 10, Engine::Auto});
  EXPECT_THROW(calc.homfly(BraidWord(5)), LimitError);
  EXPECT_THROW(calc.homfly(parse_word("aaaaaaaaaaa")), LimitError);
  EXPECT_NO_THROW(calc.homfly(parse_word("aaaaaaaaa")));
  EXPECT_THROW(parse_engine("fast"), InputError);
}

TEST(Homfly, CacheFileRoundTripAndCorruptionTolerance) {
  const auto dir = std::filesystem::temp_directory_path() / "braidmfw_cache_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "cache.tsv").string();
  HomflyCalculator a;
  a.homfly(parse_word("aaacBAAcB"));
  a.homfly(parse_word("aBaB"));
  a.save_cache(path);

  HomflyCalculator b;
  ASSERT_TRUE(b.load_cache(path));
  EXPECT_EQ(b.cache_size(), a.cache_size());
  EXPECT_EQ(b.homfly(parse_word("aBaB")), a.homfly(parse_word("aBaB")));

  std::ofstream(path, std::ios::trunc) << "garbage header\nnot\ta polynomial\n";
  HomflyCalculator c;
  EXPECT_FALSE(c.load_cache(path));
  EXPECT_EQ(c.cache_size(), 0u);
  EXPECT_FALSE(c.load_cache((dir / "missing.tsv").string()));
  std::filesystem::remove_all(dir);
}

TEST(Homfly, ConcurrentCallsAgree) {
  HomflyCalculator calc;
  std::mt19937 rng(4);
  std::vector<BraidWord> words;
  for (int i = 0; i < 24; ++i) words.push_back(testutil::random_word(rng, 4, 4, 12));
  std::vector<std::vector<LaurentPoly2>> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (const auto& w : words) results[static_cast<std::size_t>(t)].push_back(calc.homfly(w));
    });
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) EXPECT_EQ(results[static_cast<std::size_t>(t)], results[0]);
}
