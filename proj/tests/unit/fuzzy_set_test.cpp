#include <gtest/gtest.h>

#include "fcov/fuzzy_set.hpp"

using namespace fcov;

namespace {

const Universe& u3() {
  static const Universe u = Universe::indexed(3);
  return u;
}

FuzzySet fs(std::initializer_list<std::string_view> v, std::uint32_t den = kDefaultDenominator) {
  return make_fuzzy_set(u3(), v, den);
}

}  // namespace

TEST(Universe, LabelsAndLookup) {
  Universe u({"a", "b"});
  EXPECT_EQ(u.index_of("b"), 1u);
  EXPECT_FALSE(u.find("c"));
  EXPECT_THROW(u.index_of("c"), Error);
  EXPECT_THROW(Universe({"a", "a"}), Error);
  EXPECT_THROW(Universe(std::vector<std::string>{}), Error);
  EXPECT_EQ(Universe::indexed(2, "y").label(1), "y2");
}

TEST(FuzzySet, LatticeOperations) {
  auto a = fs({"0.2", "0.7", "0"}), b = fs({"0.5", "0.1", "0"});
  EXPECT_EQ(fs_union(a, b), fs({"0.5", "0.7", "0"}));
  EXPECT_EQ(fs_intersect(a, b), fs({"0.2", "0.1", "0"}));
  EXPECT_EQ(fs_complement(a), fs({"0.8", "0.3", "1"}));
  EXPECT_TRUE(fs_subset(fs_intersect(a, b), a));
  EXPECT_FALSE(fs_subset(a, b));
}

TEST(FuzzySet, MixedGridsAlignOnLcm) {
  auto a = fs({"1/3", "0", "1"}, 3), b = fs({"0.5", "0.5", "0"}, 2);
  auto j = fs_union(a, b);
  EXPECT_EQ(j.denominator(), 6u);
  EXPECT_EQ(j[0], (Grade{1, 2}));
  EXPECT_EQ(fs_intersect(a, b)[0], (Grade{1, 3}));
}

TEST(FuzzySet, CardinalityCutsAndSupport) {
  auto a = fs({"0.2", "0.5", "0"});
  EXPECT_EQ(scalar_cardinality(a), Rational(7, 10));
  EXPECT_EQ(strict_alpha_cut(a, parse_grade("0.2")), IndexSet{1});
  EXPECT_EQ(support(a), (IndexSet{0, 1}));
  EXPECT_EQ(to_string(a), "[0.2,0.5,0]");
  EXPECT_TRUE(FuzzySet::empty(u3()).is_empty());
}

TEST(FuzzySet, Errors) {
  EXPECT_THROW(fs({"0.1", "0.2"}), Error);
  try {
    fs({"0.25", "0"}, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::grade_off_grid);
  }
  try {
    fs_union(fs({"0", "0", "0"}), FuzzySet::empty(Universe::indexed(3, "y")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::universe_mismatch);
  }
}

// Exhaustive lattice laws on a two-element universe with grid 1/4.
TEST(FuzzySet, LatticeLawsExhaustive) {
  Universe u = Universe::indexed(2);
  std::vector<FuzzySet> all;
  for (std::uint32_t a = 0; a <= 4; ++a)
    for (std::uint32_t b = 0; b <= 4; ++b) all.push_back(FuzzySet(u, 4, {a, b}));
  for (const auto& x : all)
    for (const auto& y : all) {
      ASSERT_EQ(fs_union(x, y), fs_union(y, x));
      ASSERT_EQ(fs_intersect(x, fs_union(x, y)), x);
      ASSERT_EQ(fs_union(x, fs_intersect(x, y)), x);
      ASSERT_EQ(fs_complement(fs_union(x, y)), fs_intersect(fs_complement(x), fs_complement(y)));
      ASSERT_EQ(fs_subset(x, y), fs_union(x, y) == y);
      for (const auto& z : all) {
        ASSERT_EQ(fs_union(x, fs_intersect(y, z)), fs_intersect(fs_union(x, y), fs_union(x, z)));
      }
    }
}
