#include <random>

#include <gtest/gtest.h>

#include "braidmfw/alexander.hpp"
#include "braidmfw/band3.hpp"
#include "braidmfw/homflypt.hpp"
#include "test_support.hpp"

using namespace braidmfw;

namespace {

LaurentPoly1 poly(std::initializer_list<int> coeffs) {
  LaurentPoly1 p;
  int k = 0;
  for (int c : coeffs) p += LaurentPoly1(c) * t_pow(k++);
  return p;
}

BraidWord c_family(int x, int y, int z) {
  BandWord bw{{2, -1}};
  bw.insert(bw.end(), static_cast<std::size_t>(x), {1, 1});
  bw.insert(bw.end(), static_cast<std::size_t>(y), {2, 1});
  bw.insert(bw.end(), static_cast<std::size_t>(z), {3, 1});
  return band_to_artin(bw);
}

} // namespace

TEST(Burau, KnownKnots) {
  EXPECT_EQ(burau_alexander(parse_word("aaa")), poly({1, -1, 1}));
  EXPECT_EQ(burau_alexander(parse_word("aBaB")), poly({1, -3, 1}));
  EXPECT_EQ(burau_alexander(parse_word("aaaaa")), poly({1, -1, 1, -1, 1}));
  EXPECT_EQ(burau_alexander(BraidWord(1)), LaurentPoly1(1));
}

TEST(Burau, SplitLinkGivesZeroAndHopfLinkGivesUnit) {
  EXPECT_TRUE(burau_alexander(BraidWord(2)).is_zero());
  EXPECT_EQ(burau_alexander(parse_word("aa")), LaurentPoly1(1) - t_pow(1));
}

TEST(Burau, GeneratorsSatisfyBraidRelations) {
  for (int n = 3; n <= 5; ++n) {
    for (int i = 1; i < n - 1; ++i) {
      const auto a = reduced_burau_generator(n, i, 1), b = reduced_burau_generator(n, i + 1, 1);
      EXPECT_EQ(a * b * a, b * a * b);
      EXPECT_EQ(a * reduced_burau_generator(n, i, -1), identity_matrix<LaurentPoly1>(static_cast<std::size_t>(n - 1)));
    }
    if (n >= 4) {
      const auto a = reduced_burau_generator(n, 1, 1), c = reduced_burau_generator(n, 3, 1);
      EXPECT_EQ(a * c, c * a);
    }
  }
}

TEST(Burau, InvariantUnderMarkovMoves) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const BraidWord w = testutil::random_knot(rng, 3 + trial % 2, 2, 10);
    const auto d = burau_alexander(w);
    EXPECT_EQ(burau_alexander(stabilize(w, trial % 2 ? 1 : -1)), d);
    EXPECT_EQ(burau_alexander(conjugate(w, 1, 1)), d);
    EXPECT_EQ(burau_alexander(mirror(w)), d);
  }
}

TEST(Burau, AgreesWithHomflySpecialization) {
  // Delta(t) = P(v = 1, z = t^(1/2) - t^(-1/2)) up to units: compare via
  // the Conway polynomial, which is P at v = 1 in this convention.
  HomflyCalculator calc;
  for (const char* s : {"aaa", "aBaB", "aaacBAAcB", "aabbcbAbbcB"}) {
    const BraidWord w = parse_word(s);
    LaurentPoly1 conway_sub; // substitute z^2 -> t - 2 + t^-1 after setting v = 1
    const auto p = calc.homfly(w);
    for (const auto& [e, c] : p.terms()) {
      ASSERT_EQ(e[1] % 2, 0);
      LaurentPoly1 term(c);
      term = term * (t_pow(1) - LaurentPoly1(2) + t_pow(-1)).pow(static_cast<unsigned>(e[1] / 2));
      conway_sub += term;
    }
    EXPECT_EQ(normalize_up_to_unit(conway_sub), burau_alexander(w)) << s;
  }
}

TEST(Seifert, TrefoilOracle) {
  const SeifertMatrix v{{{-1, 1}, {0, -1}}};
  EXPECT_EQ(normalize_alexander(alexander_from_seifert(v)), poly({1, -1, 1}));
}

TEST(Seifert, CFamilyShapeAndSmallValue) {
  const auto v = seifert_C(1, 2, 4);
  EXPECT_EQ(v.dimension(), 6u);
  EXPECT_EQ(leading_terms(alexander_from_seifert(v), 4), (std::vector<BigInt>{1, -4, 6, -7}));
  EXPECT_THROW(seifert_C(0, 1, 1), InputError);
}

TEST(Seifert, RecurrenceInFirstParameter) {
  for (int x = 3; x <= 8; ++x)
    for (int y = 2; y <= 4; ++y)
      for (int z = 2; z <= 4; ++z) {
        const auto d = alexander_from_seifert(seifert_C(x, y, z));
        const auto d1 = alexander_from_seifert(seifert_C(x - 1, y, z));
        const auto d2 = alexander_from_seifert(seifert_C(x - 2, y, z));
        EXPECT_EQ(d, (t_pow(1) - LaurentPoly1(1)) * d1 + t_pow(1) * d2) << x << y << z;
      }
}

TEST(Seifert, LeadingTermsOnUnitCube) {
  for (int x = 2; x <= 3; ++x)
    for (int y = 2; y <= 3; ++y)
      for (int z = 2; z <= 3; ++z)
        EXPECT_EQ(leading_terms(alexander_from_seifert(seifert_C(x, y, z)), 2), (std::vector<BigInt>{1, -5}));
}

TEST(Seifert, SignPatternOfUnnormalizedDeterminant) {
  for (int x = 1; x <= 4; ++x)
    for (int y = 1; y <= 4; ++y)
      for (int z = 1; z <= 4; ++z) {
        const auto d = alexander_from_seifert(seifert_C(x, y, z));
        const auto low = d.coefficient({d.degree_range(0).first});
        EXPECT_EQ(low, (x + y + z) % 2 == 0 ? 1 : -1) << x << y << z;
      }
}

TEST(Seifert, AgreesWithBurauRoute) {
  for (int x = 1; x <= 8; ++x)
    for (int y = 1; y <= 4; ++y)
      for (int z = 1; z <= 4; ++z)
        EXPECT_EQ(burau_alexander(c_family(x, y, z)), normalize_up_to_unit(alexander_from_seifert(seifert_C(x, y, z))))
            << x << y << z;
}

TEST(Seifert, FourTermPrefixRanges) {
  // First four coefficients [1, -4, 6, -7] along the one-parameter slices.
  const std::vector<BigInt> target{1, -4, 6, -7};
  auto lt = [](int x, int y, int z) { return leading_terms(alexander_from_seifert(seifert_C(x, y, z)), 4); };
  for (int k = 4; k <= 9; ++k) {
    EXPECT_EQ(lt(1, 2, k), target) << k;
    EXPECT_EQ(lt(1, k, 2), target) << k;
    EXPECT_EQ(lt(2, k, 1), target) << k;
    EXPECT_EQ(lt(k, 2, 1), target) << k;
  }
  EXPECT_EQ(lt(1, 2, 3), (std::vector<BigInt>{1, -4, 6, -6}));
  EXPECT_EQ(lt(1, 2, 2), (std::vector<BigInt>{1, -4, 5, -4}));
}

TEST(Seifert, DFamilyLeadingTerms) {
  BandWord bw{{2, -1}, {1, 1}, {1, 1}, {2, 1}, {2, 1}, {3, 1}, {3, 1}, {1, 1}, {1, 1}};
  EXPECT_EQ(leading_terms(burau_alexander(band_to_artin(bw)), 2), (std::vector<BigInt>{1, -6}));
}
