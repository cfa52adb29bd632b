#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "braidmfw/knot_table.hpp"

using namespace braidmfw;
using Rational = boost::rational<long long>;

TEST(KnotTable, DefaultHasFiveRows) {
  const auto rows = default_knot_table();
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].name, "9_42");
  EXPECT_EQ(rows[2].expected_deficit, Rational(2));
  EXPECT_EQ(rows[1].expected_c, 7);
  for (const auto& e : rows) EXPECT_EQ(e.word().strands(), e.braid_index);
}

TEST(KnotTable, FormatRoundTrip) {
  const auto rows = default_knot_table();
  EXPECT_EQ(format_knot_table(rows), std::string(kDefaultKnotTable));
  EXPECT_EQ(parse_knot_table(format_knot_table(rows)).size(), rows.size());
}

TEST(KnotTable, OptionalColumnsAndRationals) {
  const auto rows = parse_knot_table("name,braid_word,braid_index,expected_c,expected_deficit\r\n"
                                     "trefoil,aaa,2,,\r\n"
                                     "x,1 -2 1 -2,3,0,1/2\n\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].expected_c.has_value());
  EXPECT_FALSE(rows[0].expected_deficit.has_value());
  EXPECT_EQ(*rows[1].expected_deficit, Rational(1, 2));
  EXPECT_EQ(format_knot_table(rows), "name,braid_word,braid_index,expected_c,expected_deficit\n"
                                     "trefoil,aaa,2,,\n"
                                     "x,1 -2 1 -2,3,0,1/2\n");
}

TEST(KnotTable, RejectsMalformedInput) {
  const std::string header = "name,braid_word,braid_index,expected_c,expected_deficit\n";
  EXPECT_THROW(parse_knot_table(""), InputError);
  EXPECT_THROW(parse_knot_table("name,word\n"), InputError);
  EXPECT_THROW(parse_knot_table(header + "k,aaa,2,3\n"), InputError);
  EXPECT_THROW(parse_knot_table(header + "k,aa1,2,,\n"), InputError);
  EXPECT_THROW(parse_knot_table(header + "k,aaac,2,,\n"), InputError);
  EXPECT_THROW(parse_knot_table(header + "k,aaa,0,,\n"), InputError);
  EXPECT_THROW(parse_knot_table(header + "k,aaa,2,x,\n"), InputError);
  EXPECT_THROW(parse_knot_table(header + "k,aaa,2,,1/0\n"), InputError);
  EXPECT_THROW(parse_knot_table(header + ",aaa,2,,\n"), InputError);
}

TEST(KnotTable, BundledFileMatchesBuiltIn) {
  const auto path = std::filesystem::path(BRAIDMFW_SOURCE_DIR) / "data" / "knot_table.csv";
  ASSERT_TRUE(std::filesystem::exists(path));
  EXPECT_EQ(format_knot_table(load_knot_table(path.string())), std::string(kDefaultKnotTable));
  EXPECT_THROW(load_knot_table("/nonexistent/table.csv"), InputError);
}
