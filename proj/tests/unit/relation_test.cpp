#include <gtest/gtest.h>

#include "fcov/relation.hpp"

using namespace fcov;

namespace {

const Universe& u3() {
  static const Universe u = Universe::indexed(3);
  return u;
}

FuzzySet row(std::initializer_list<std::string_view> v) { return make_fuzzy_set(u3(), v, 10); }

}  // namespace

TEST(Relation, CoveringFromRows) {
  std::vector<FuzzySet> rows{row({"1", "0.5", "0"}), row({"0", "1", "0"}), row({"0", "0.2", "1"})};
  auto r = FuzzyRelation::from_rows(u3(), rows);
  EXPECT_EQ(r(0, 1), (Grade{5, 10}));
  auto c = covering_from_relation(r);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.member(0).name, "R(x1)");
  auto chk = relation_checks(r);
  EXPECT_TRUE(chk.reflexive);
  EXPECT_FALSE(chk.symmetric);
}

TEST(Relation, ZeroRowsAndGaps) {
  std::vector<FuzzySet> gap{row({"1", "0", "0"}), row({"1", "0", "0"}), row({"1", "0", "0"})};
  try {
    covering_from_relation(FuzzyRelation::from_rows(u3(), gap));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::coverage_gap);
  }
  std::vector<FuzzySet> zero{row({"1", "1", "1"}), row({"0", "0", "0"}), row({"0", "0", "1"})};
  try {
    covering_from_relation(FuzzyRelation::from_rows(u3(), zero));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::null_member);
  }
}

TEST(Relation, NeighborhoodRelationIsReflexiveUpToAlphaAndTransitive) {
  auto c = make_covering(u3(), {{"A", row({"0.6", "0.4", "0"})}, {"B", row({"0", "0.8", "1"})}});
  auto nr = relation_from_neighborhoods(c);
  auto chk = relation_checks(nr.relation);
  ASSERT_TRUE(chk.alpha_reflexive);
  EXPECT_EQ(*chk.alpha_reflexive, nr.alpha);
  EXPECT_EQ(nr.alpha, (Grade{4, 10}));
  EXPECT_TRUE(chk.min_transitive);
  EXPECT_EQ(nr.relation.row(1), neighborhood(c, 1));
}
