#include <random>

#include <gtest/gtest.h>

#include "braidmfw/band3.hpp"
#include "braidmfw/homflypt.hpp"

using namespace braidmfw;

namespace {

BandWord bw(const char* text) { return parse_band_word(text); }

BandWord random_band_word(std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> band(1, 3), coin(0, 1);
  BandWord out;
  for (int i = 0; i < len; ++i) out.push_back({band(rng), coin(rng) ? 1 : -1});
  return out;
}

} // namespace

TEST(BandWord, TextForm) {
  const BandWord w = bw("-2 1 1 2 2 3");
  ASSERT_EQ(w.size(), 6u);
  EXPECT_EQ(w[0], (BandLetter{2, -1}));
  EXPECT_EQ(to_text(w), "-2 1 1 2 2 3");
  EXPECT_EQ(exponent_sum(w), 4);
  EXPECT_THROW(bw("4"), InputError);
  EXPECT_THROW(bw("1 x"), InputError);
  EXPECT_TRUE(bw("").empty());
}

TEST(BandWord, ArtinConversion) {
  EXPECT_EQ(to_text(band_to_artin(bw("1"))), "a");
  EXPECT_EQ(to_text(band_to_artin(bw("3"))), "baB");
  const BraidWord alpha = band_to_artin(bw("1 3"));
  EXPECT_EQ(to_text(alpha), "abaB");
  EXPECT_EQ(exponent_sum(alpha), 2);
  EXPECT_EQ(band_to_artin(bw("")).strands(), 3);
}

TEST(BandWord, ExponentSumSurvivesConversion) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const BandWord w = random_band_word(rng, 1 + trial % 9);
    EXPECT_EQ(exponent_sum(band_to_artin(w)), exponent_sum(w));
  }
}

TEST(BandWord, ThreeSpellingsOfAlphaAgree) {
  auto& calc = default_calculator();
  const auto p13 = calc.homfly(band_to_artin(bw("1 3 1 3 2")));
  EXPECT_EQ(calc.homfly(band_to_artin(bw("2 1 2 1 2"))), p13);
  EXPECT_EQ(calc.homfly(band_to_artin(bw("3 2 3 2 2"))), p13);
  EXPECT_EQ(reduced_burau(band_to_artin(bw("1 3"))), reduced_burau(band_to_artin(bw("2 1"))));
  EXPECT_EQ(reduced_burau(band_to_artin(bw("3 2"))), reduced_burau(band_to_artin(bw("2 1"))));
}

TEST(BandWord, SubscriptRotationIsConjugation) {
  auto& calc = default_calculator();
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const BandWord w = random_band_word(rng, 2 + trial % 6);
    EXPECT_EQ(calc.homfly(band_to_artin(rotate_subscripts(w))), calc.homfly(band_to_artin(w)));
  }
}

TEST(ShortestForm, AlphaSquared) {
  const auto r = shortest_band_form(bw("1 3 1 3"));
  EXPECT_EQ(r.length, 4u);
  EXPECT_EQ(r.form, XuForm::AlphaPowerP);
  EXPECT_EQ(r.k, 2);
  EXPECT_TRUE(r.complete);
}

TEST(ShortestForm, AlphaSpellingsAndCancellation) {
  const auto r = shortest_band_form(bw("2 1"));
  EXPECT_EQ(r.length, 2u);
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(to_text(r.representative), "1 3");
  EXPECT_EQ(shortest_band_form(bw("1 -1")).length, 0u);
  EXPECT_EQ(shortest_band_form(bw("1 2 -2 3 -3 -1")).length, 0u);
}

TEST(ShortestForm, NegativeAndMixedForms) {
  EXPECT_EQ(shortest_band_form(bw("-1 -3 -1 -3")).form, XuForm::NAlphaBarPower);
  const auto mixed = shortest_band_form(bw("-2 1 1 2 2 3"));
  EXPECT_EQ(mixed.length, 6u);
  EXPECT_EQ(mixed.form, XuForm::NP);
}

TEST(ShortestForm, IdempotentAndConjugationInvariant) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const BandWord w = random_band_word(rng, 2 + trial % 7);
    const auto r = shortest_band_form(w);
    ASSERT_TRUE(r.complete);
    EXPECT_LE(r.length, w.size());
    EXPECT_EQ(shortest_band_form(r.representative).length, r.length);
    BandWord rotated(w.begin() + 1, w.end());
    rotated.push_back(w.front());
    EXPECT_EQ(shortest_band_form(rotated).length, r.length);
    EXPECT_EQ(default_calculator().homfly(band_to_artin(r.representative)), default_calculator().homfly(band_to_artin(w)));
  }
}

TEST(ShortestForm, BudgetExhaustionIsReported) {
  const auto r = shortest_band_form(bw("1 2 3 -1 2 -3 1 2 3 -2"), BandSearchBudget{5});
  EXPECT_FALSE(r.complete);
}

TEST(Families, ExamplesFromTheLemma) {
  const auto c = classify_ABCD(bw("-2 1 1 2 2 3"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (FamilyMatch{Family::C, {2, 2, 1}}));
  const auto a = classify_ABCD(bw("-3 -2 1 1"));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(*a, (FamilyMatch{Family::A, {2}}));
  EXPECT_FALSE(classify_ABCD(bw("-3 -2 1 1 1")).has_value());
  EXPECT_FALSE(classify_ABCD(bw("1 2 3")).has_value());
}

TEST(Families, LiteralWordsAndConstraints) {
  EXPECT_EQ(to_text(family_word(Family::D, {2, 2, 1, 1})), "-2 1 1 2 2 3 1");
  EXPECT_EQ(component_count(band_to_artin(family_word(Family::C, {2, 2, 1}))), 1);
  EXPECT_THROW(family_word(Family::A, {3}), InputError);
  EXPECT_THROW(family_word(Family::B, {3}), InputError);
  EXPECT_THROW(parse_family("E"), InputError);
  EXPECT_EQ(parse_family("c"), Family::C);
}

TEST(Families, ClassifyInvertsFamilyWordOnGrid) {
  int checked = 0;
  for (int x = 1; x <= 6; ++x)
    for (int y = 1; y <= 6; ++y) {
      for (auto f : {Family::A, Family::B}) {
        std::vector<int> p = f == Family::A ? std::vector<int>{x} : std::vector<int>{x, y};
        if (!family_constraints_hold(f, p)) continue;
        const auto m = classify_ABCD(family_word(f, p));
        ASSERT_TRUE(m.has_value());
        EXPECT_EQ(*m, (FamilyMatch{f, p}));
        ++checked;
      }
      for (int z = 1; z <= 4; ++z) {
        if (family_constraints_hold(Family::C, {x, y, z})) {
          EXPECT_EQ(classify_ABCD(family_word(Family::C, {x, y, z})), (FamilyMatch{Family::C, {x, y, z}}));
          ++checked;
        }
        for (int w = 1; w <= 3; ++w)
          if (family_constraints_hold(Family::D, {x, y, z, w})) {
            EXPECT_EQ(classify_ABCD(family_word(Family::D, {x, y, z, w})), (FamilyMatch{Family::D, {x, y, z, w}}));
            ++checked;
          }
      }
    }
  EXPECT_GT(checked, 100);
}

TEST(Families, ValidParametersGiveKnots) {
  for (int x = 1; x <= 5; ++x)
    for (int y = 1; y <= 5; ++y)
      for (int z = 1; z <= 5; ++z)
        if (family_constraints_hold(Family::C, {x, y, z})) {
          EXPECT_EQ(component_count(band_to_artin(family_word(Family::C, {x, y, z}))), 1) << x << y << z;
        }
}
