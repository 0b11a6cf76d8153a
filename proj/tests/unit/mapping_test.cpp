#include <gtest/gtest.h>

#include "fcov/mapping.hpp"
#include "fcov/verify/sample_data.hpp"

using namespace fcov;
namespace sample = fcov::verify::sample;

namespace {

FuzzySet s4(std::initializer_list<std::string_view> v) { return sample::set4(v); }

}  // namespace

TEST(Mapping, ConstructionAndKernel) {
  auto f = sample::alternating_map();
  EXPECT_EQ(f(2), 0u);
  EXPECT_EQ(to_string(kernel_partition(f)), "{{x1,x3},{x2,x4}}");
  try {
    PointMapping(sample::u4(), Universe::indexed(3, "y"), {0, 1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_surjective);
  }
  PointMapping lax(sample::u4(), Universe::indexed(3, "y"), {0, 1, 0, 1}, Surjectivity::lax);
  EXPECT_FALSE(lax.is_surjective());
  auto g = PointMapping::from_pairs(sample::u4(), Universe::indexed(2, "y"),
                                    {{"x1", "y1"}, {"x2", "y2"}, {"x3", "y1"}, {"x4", "y2"}});
  EXPECT_EQ(g, f);
}

TEST(Mapping, ImageAndPreimageSets) {
  auto f = sample::paired_map();
  auto a = s4({"0.2", "0.7", "0", "0.4"});
  auto img = image_set(f, a);
  EXPECT_EQ(to_string(img), "[0.7,0.4]");
  EXPECT_EQ(preimage_set(f, img), s4({"0.7", "0.7", "0.4", "0.4"}));
  EXPECT_TRUE(fs_subset(a, preimage_set(f, img)));
}

TEST(Mapping, ConsistencyAndCoverings) {
  auto c = sample::primed_covering();
  EXPECT_TRUE(is_consistent(sample::alternating_map(), c));
  EXPECT_FALSE(is_consistent(sample::paired_map(), c));
  auto img = image_covering(sample::alternating_map(), c);
  EXPECT_EQ(img.member(0).name, "C'1");
  EXPECT_TRUE(covering_equal(preimage_covering(sample::alternating_map(), img), c));
  PointMapping lax(sample::u4(), Universe::indexed(3, "y"), {0, 1, 0, 1}, Surjectivity::lax);
  try {
    image_covering(lax, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_surjective);
  }
}
