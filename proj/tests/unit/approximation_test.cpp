#include <gtest/gtest.h>

#include "fcov/approximation.hpp"
#include "fcov/verify/sample_data.hpp"

using namespace fcov;
namespace sample = fcov::verify::sample;

namespace {

FuzzySet s4(std::initializer_list<std::string_view> v) { return sample::set4(v); }

}  // namespace

TEST(Approximation, LowerIsUnionOfMembersBelow) {
  auto c = sample::members({21, 22, 23});
  auto x = s4({"0.2", "0.5", "0.6", "0.1"});
  auto p = approximate(c, x);
  EXPECT_EQ(p.lower, s4({"0.2", "0.4", "0.5", "0"}));
  EXPECT_EQ(p.upper, s4({"0.2", "0.4", "0.5", "0.5"}));
  EXPECT_EQ(lower_approx(c, x), p.lower);
  EXPECT_EQ(upper_approx(c, x), p.upper);
}

TEST(Approximation, EmptyAndMemberInputs) {
  auto c = sample::members({13, 14, 15, 16});
  auto empty = FuzzySet::empty(sample::u4());
  EXPECT_EQ(lower_approx(c, empty), empty);
  EXPECT_EQ(upper_approx(c, empty), empty);
  for (const auto& m : c.members()) {
    EXPECT_EQ(lower_approx(c, m.set), m.set);
    EXPECT_EQ(upper_approx(c, m.set), m.set);
  }
}

TEST(Approximation, NeighborhoodUnionAndBound) {
  auto c = sample::members({24, 25, 26});
  auto x = s4({"0.1", "0", "0.2", "0"});
  EXPECT_EQ(subcovering_bound(c, x), s4({"0.1", "0.1", "0.2", "0.1"}));
  EXPECT_TRUE(fs_subset(neighborhood_union(c, x), upper_approx(c, x)));
  try {
    subcovering_bound(c, s4({"1", "0", "0", "0"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_covered);
  }
}

TEST(Approximation, RoughnessMeasures) {
  auto c = sample::members({21, 22, 23});
  auto x = s4({"0.2", "0.5", "0.6", "0.1"});
  EXPECT_EQ(roughness(c, x), Rational(5, 16));
  EXPECT_EQ(roughness_ab(c, x, parse_grade("0.4"), parse_grade("0.2")), Rational(2, 3));
  auto rep = roughness_report(c, x, parse_grade("0.4"), parse_grade("1"));
  EXPECT_EQ(rep.mu, Rational(5, 16));
  EXPECT_FALSE(rep.mu_alpha_beta);
  try {
    roughness_ab(c, x, parse_grade("0.4"), parse_grade("1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degenerate_cut);
  }
  EXPECT_EQ(roughness(c, FuzzySet::empty(sample::u4())), Rational(0));
}

TEST(Approximation, SetOnAnotherGridIsLifted) {
  auto c = sample::members({21, 22, 23});
  auto x = make_fuzzy_set(sample::u4(), {"1/5", "1/2", "3/5", "1/10"}, 10);
  EXPECT_EQ(lower_approx(c, x), s4({"0.2", "0.4", "0.5", "0"}));
  auto thirds = make_fuzzy_set(sample::u4(), {"1/3", "1/3", "1/3", "1/3"}, 3);
  auto p = approximate(c, thirds);
  EXPECT_TRUE(fs_subset(p.lower, thirds));
}
