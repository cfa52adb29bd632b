#include <gtest/gtest.h>

#include "braidmfw/json_io.hpp"

using namespace braidmfw;

TEST(Json, MFWReportRoundTrip) {
  const auto r = mfw_report(parse_word("aaacBAAcB"), 4);
  const Json j = to_json(r);
  EXPECT_EQ(j.at("deficit_at_b").at("text"), "1");
  EXPECT_EQ(mfw_report_from_json(Json::parse(j.dump())), r);
}

TEST(Json, RationalForm) {
  const Json j = rational_json(Rational(3, 4));
  EXPECT_EQ(j.at("text"), "3/4");
  EXPECT_EQ(rational_from_json(j), Rational(3, 4));
}

TEST(Json, CertificateCarriesReplayableWitnesses) {
  const auto cert = thmA_check(parse_word("aaacBAAcB"), 3, {4, 20000});
  const Json j = to_json(cert);
  EXPECT_EQ(j.at("resolutions").size(), 2u);
  for (const auto& res : j.at("resolutions")) {
    BraidWord w = parse_any(res.at("word").get<std::string>(), j.at("strands").get<int>());
    for (const auto& m : res.at("positive").at("witness")) {
      const BraidWord next = parse_any(m.at("result").get<std::string>(), m.at("strands").get<int>());
      EXPECT_LE(next.strands(), w.strands());
      w = next;
    }
    EXPECT_EQ(to_text(w), res.at("positive").at("final_word").get<std::string>());
  }
}

TEST(Json, BandAndTableForms) {
  const auto sf = shortest_band_form(parse_band_word("2 1"));
  const Json j = to_json(sf);
  EXPECT_EQ(j.at("representative"), "1 3");
  EXPECT_EQ(j.at("k"), 1);
  EXPECT_TRUE(to_json(std::optional<FamilyMatch>{}).is_null());
  EXPECT_EQ(to_json(classify_ABCD(parse_band_word("-3 -2 1 1"))).at("family"), "A");
  const Json row = to_json(default_knot_table()[2]);
  EXPECT_EQ(row.at("expected_deficit").at("num"), 2);
}

TEST(Json, QuadrantScan) {
  const Json j = to_json(quadrant_scan(parse_word("aaa"), 3, 1));
  EXPECT_EQ(j.at("points").size(), 3u);
  EXPECT_EQ(j.at("violations"), 0);
}
