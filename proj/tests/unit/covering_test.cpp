#include <gtest/gtest.h>

#include "fcov/covering.hpp"
#include "fcov/verify/sample_data.hpp"

using namespace fcov;
namespace sample = fcov::verify::sample;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal_inconsistency;
}

FuzzySet s4(std::initializer_list<std::string_view> v) { return sample::set4(v); }

}  // namespace

TEST(Covering, ConstructionChecks) {
  const Universe& u = sample::u4();
  EXPECT_EQ(code_of([&] { make_covering(u, {{"A", s4({"0.5", "0.2", "0", "0"})}}); }), Errc::coverage_gap);
  EXPECT_EQ(code_of([&] { make_covering(u, {{"A", s4({"1", "1", "1", "1"})}, {"Z", s4({"0", "0", "0", "0"})}}); }),
            Errc::null_member);
  EXPECT_EQ(code_of([&] { make_covering(u, {}); }), Errc::coverage_gap);
  auto c = make_covering(u, {{"A", s4({"1", "1", "1", "1"})}, {"B", s4({"1", "1", "1", "1"})}});
  EXPECT_EQ(c.size(), 1u);
  ASSERT_EQ(c.merged().size(), 1u);
  EXPECT_EQ(c.merged()[0].kept, "A");
  EXPECT_EQ(c.merged()[0].dropped, "B");
  EXPECT_EQ(code_of([&] { c.member(3); }), Errc::index_out_of_range);
}

TEST(Covering, NeighborhoodsAndInducedCovering) {
  auto c = sample::primed_covering();
  EXPECT_EQ(neighborhood(c, "x1"), s4({"0.5", "0.5", "0.5", "0.5"}));
  EXPECT_EQ(neighborhood(c, "x2"), s4({"0", "0.5", "0", "0.5"}));
  auto cov = induced_covering(c);
  EXPECT_EQ(cov.size(), 2u);
  EXPECT_EQ(cov.member(0).name, "N(x1)");
  EXPECT_EQ(cov.member(1).name, "N(x2)");
  EXPECT_EQ(code_of([&] { neighborhood(c, "x9"); }), Errc::unknown_element);
}

TEST(Covering, FamilyErrors) {
  auto c = sample::primed_covering();
  EXPECT_EQ(code_of([&] { CoveringFamily(sample::u4(), {{"A", c}, {"A", c}}); }), Errc::duplicate_name);
  EXPECT_EQ(code_of([&] { CoveringFamily(sample::u8(), {{"A", c}}); }), Errc::universe_mismatch);
  EXPECT_EQ(code_of([&] { family_neighborhoods(std::span<const FuzzyCovering* const>{}); }), Errc::empty_family);
  CoveringFamily d(sample::u4(), {{"A", c}});
  EXPECT_EQ(code_of([&] { d.get("B"); }), Errc::unknown_covering);
}

TEST(Covering, SubcoveringsOrderedBySizeThenIndex) {
  auto c = sample::members({24, 25, 26});
  auto fc = subcoverings(c, s4({"0.1", "0", "0.2", "0"}));
  ASSERT_GE(fc.size(), 2u);
  for (std::size_t i = 1; i < fc.size(); ++i)
    EXPECT_TRUE(fc[i - 1].size() < fc[i].size() || (fc[i - 1].size() == fc[i].size() && fc[i - 1] < fc[i]));
  EXPECT_EQ(code_of([&] { subcoverings(c, s4({"0.1", "0", "0.2", "0"}), 2); }), Errc::size_guard);
}

TEST(Covering, ReducibleAndIntersectionalMembers) {
  auto c = make_covering(sample::u4(), {{"A", s4({"1", "0", "0", "0"})},
                                       {"B", s4({"0", "1", "1", "1"})},
                                       {"AB", s4({"1", "1", "1", "1"})},
                                       {"M", s4({"0", "0.5", "0.5", "0.5"})}});
  EXPECT_TRUE(is_reducible(c, 2));
  EXPECT_FALSE(is_reducible(c, 0));
  EXPECT_FALSE(is_reducible(c, 3));
  EXPECT_EQ(reduce_covering(c).size(), 3u);
  EXPECT_FALSE(reduce_covering(c).find("AB"));
  EXPECT_FALSE(is_intersectional(c, 0));

  auto d = make_covering(sample::u4(), {{"L", s4({"1", "1", "0", "0"})},
                                       {"R", s4({"0", "1", "1", "0"})},
                                       {"Mid", s4({"0", "1", "0", "0"})},
                                       {"All", s4({"1", "1", "1", "1"})}});
  EXPECT_TRUE(is_intersectional(d, 2));
  EXPECT_FALSE(is_intersectional(d, 3));
  auto is = reduce_intersections(d);
  EXPECT_EQ(is.size(), 3u);
  EXPECT_FALSE(is.find("Mid"));
}

TEST(Covering, UnionIntersectionCoarseness) {
  auto a = sample::members({21, 22, 23});
  auto cov = induced_covering(a);
  EXPECT_TRUE(covering_equal(covering_intersection(a, a), cov));
  EXPECT_TRUE(is_coarser(cov, a));
  EXPECT_TRUE(covering_equal(covering_union(a, a), a));
  EXPECT_EQ(code_of([&] { covering_union(a, sample::car_price()); }), Errc::universe_mismatch);
}
