#include <gtest/gtest.h>

#include "fcov/grade.hpp"

using namespace fcov;

namespace {

Errc code_of(std::string_view text, std::uint32_t den = kDefaultDenominator) {
  try {
    parse_grade(text, den);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal_inconsistency;
}

}  // namespace

TEST(Grade, ParsesDecimalsExactly) {
  EXPECT_EQ(parse_grade("0.45", 100).num, 45u);
  EXPECT_EQ(parse_grade(".5", 10).num, 5u);
  EXPECT_EQ(parse_grade("1.000", 10).num, 10u);
  EXPECT_EQ(parse_grade("0", 10).num, 0u);
  EXPECT_EQ(parse_grade("0.50", 10).num, 5u);
  EXPECT_EQ(parse_grade("1/3", 3).num, 1u);
  EXPECT_EQ(parse_grade("2/4", 10).num, 5u);
}

TEST(Grade, NeverRounds) {
  EXPECT_EQ(code_of("0.25", 10), Errc::grade_off_grid);
  EXPECT_EQ(code_of("1/3", 10), Errc::grade_off_grid);
  EXPECT_EQ(code_of("0.00001"), Errc::grade_off_grid);
}

TEST(Grade, RejectsMalformedAndOutOfRange) {
  EXPECT_EQ(code_of(""), Errc::parse_error);
  EXPECT_EQ(code_of("."), Errc::parse_error);
  EXPECT_EQ(code_of("-0.1"), Errc::parse_error);
  EXPECT_EQ(code_of("1.5"), Errc::parse_error);
  EXPECT_EQ(code_of("2"), Errc::parse_error);
  EXPECT_EQ(code_of("4/3"), Errc::parse_error);
  EXPECT_EQ(code_of("1/0"), Errc::parse_error);
  EXPECT_EQ(code_of("0.1e1"), Errc::parse_error);
  EXPECT_EQ(code_of("0.5", 2'000'000), Errc::grid_too_fine);
}

TEST(Grade, FormatsShortestExactText) {
  EXPECT_EQ(format_grade({45, 100}), "0.45");
  EXPECT_EQ(format_grade({5000, 10000}), "0.5");
  EXPECT_EQ(format_grade({10, 10}), "1");
  EXPECT_EQ(format_grade({0, 10}), "0");
  EXPECT_EQ(format_grade({1, 3}), "1/3");
  EXPECT_EQ(format_grade({2, 6}), "1/3");
  EXPECT_EQ(format_grade({1, 8}), "0.125");
}

TEST(Grade, FormatParseRoundTrip) {
  for (std::uint32_t den : {1u, 2u, 3u, 7u, 10u, 12u, 100u}) {
    for (std::uint32_t k = 0; k <= den; ++k) {
      Grade g{k, den};
      EXPECT_EQ(parse_grade(format_grade(g), den), g) << k << "/" << den;
    }
  }
}

TEST(Grade, CommonDenominator) {
  EXPECT_EQ(common_denominator(10, 4), 20u);
  EXPECT_THROW(common_denominator(999'983, 999'979), Error);
  EXPECT_EQ((Grade{1, 2}), (Grade{5, 10}));
  EXPECT_LT((Grade{1, 3}), (Grade{4, 10}));
}
