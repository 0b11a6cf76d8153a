#include <gtest/gtest.h>

#include "fcov/verify/compression.hpp"
#include "fcov/verify/counterexamples.hpp"
#include "fcov/verify/findings.hpp"
#include "fcov/verify/golden.hpp"
#include "fcov/verify/oracles.hpp"
#include "fcov/verify/sample_data.hpp"
#include "fcov/verify/properties.hpp"

using namespace fcov;
using namespace fcov::verify;

namespace {

void expect_all_ok(const std::vector<Check>& cs) {
  for (const auto& c : cs) EXPECT_TRUE(c.ok()) << c.id << ": " << c.detail;
}

SuiteOptions small(std::uint64_t seed) {
  SuiteOptions o;
  o.seed = seed;
  o.cases = 60;
  return o;
}

}  // namespace

TEST(Verify, GoldenAndCounterexampleSuites) {
  expect_all_ok(golden_checks());
  expect_all_ok(counterexample_checks());
}

TEST(Verify, SmallRandomRunsWithOtherSeeds) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    expect_all_ok(property_checks(small(seed)));
    expect_all_ok(compression_checks(small(seed)));
    expect_all_ok({dynamic_checks(small(seed))});
  }
}

TEST(Verify, SuitesAreDeterministic) {
  auto a = property_checks(small(11)), b = property_checks(small(11));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].cases, b[i].cases);
    EXPECT_EQ(a[i].detail, b[i].detail);
  }
  auto f = finding_checks(small(11)), g = finding_checks(small(11));
  ASSERT_EQ(f.size(), g.size());
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(f[i].detail, g[i].detail);
}

TEST(Verify, FindingsAreInformational) {
  for (const auto& c : finding_checks(small(5))) EXPECT_EQ(c.verdict, Verdict::info) << c.id;
}

TEST(Oracle, NeighborhoodAndReductsOnSmallFamily) {
  oracle::Family f{{10, 5, 0}, {0, 5, 10}};
  EXPECT_EQ(oracle::neighborhood(f, 1, 3, 10), (oracle::Vec{0, 5, 0}));
  EXPECT_EQ(oracle::neighborhood(f, 0, 3, 10), (oracle::Vec{10, 5, 0}));
  // The second copy of the same covering is redundant either way round.
  auto r = oracle::reducts({f, f}, 3, 10);
  EXPECT_EQ(r.reducts, (std::vector<oracle::Mask>{1, 2}));
  EXPECT_EQ(r.core, 0u);
  EXPECT_EQ(r.superfluous, 3u);
}

TEST(Oracle, RemovalFixpointsAndUnions) {
  oracle::Family f{{10, 0}, {0, 10}, {10, 10}};
  EXPECT_TRUE(oracle::expressible(f, 7, 2, true, 10));
  EXPECT_FALSE(oracle::expressible(f, 3, 0, true, 10));
  EXPECT_EQ(oracle::all_removal_fixpoints(f, true, 10), (std::set<oracle::Mask>{3}));
  EXPECT_TRUE(oracle::is_union_of_members(f, {0, 0}));
  EXPECT_FALSE(oracle::is_union_of_members(f, {5, 0}));
}
