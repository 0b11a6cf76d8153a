#include <gtest/gtest.h>

#include "fcov/infosys.hpp"
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

}  // namespace

TEST(Infosys, SystemConstruction) {
  EXPECT_EQ(code_of([] { FuzzyCoveringSystem(sample::u8(), {}); }), Errc::empty_family);
  auto s = sample::cars();
  EXPECT_EQ(s.names(), (std::vector<std::string>{"price", "structure", "size", "appearance"}));
  EXPECT_EQ(s.get("appearance").size(), 2u);
}

TEST(Infosys, PartitionsPerCovering) {
  auto s = sample::cars();
  EXPECT_EQ(to_string(covering_partition(s.get("price"))), "{{x1,x2},{x3,x4,x5,x6,x7,x8}}");
  EXPECT_EQ(to_string(covering_partition(s.get("appearance"))), "{{x1,x2,x3,x4,x5,x6,x7,x8}}");
  EXPECT_EQ(to_string(family_partition(s)), "{{x1,x2},{x3,x5},{x4,x7,x8},{x6}}");
  EXPECT_EQ(homomorphism_partition(s), family_partition(s));
}

TEST(Infosys, NeighborhoodEqualityCanMergeUnequalValues) {
  Universe u = Universe::indexed(2);
  auto c = make_covering(u, {{"A", make_fuzzy_set(u, {"1", "0.5"})}});
  EXPECT_EQ(covering_partition(c).block_count(), 1u);
  EXPECT_EQ(value_partition(c).block_count(), 2u);
  FuzzyCoveringSystem s(u, {{"A", c}});
  auto r = build_homomorphism(s);
  EXPECT_EQ(r.image.universe().size(), 2u);
  EXPECT_TRUE(is_consistent(r.mapping, c));
}

TEST(Infosys, CompressionOfFourAttributeSystem) {
  auto r = build_homomorphism(sample::cars());
  EXPECT_EQ(r.image.universe().size(), 4u);
  EXPECT_EQ(std::vector<std::size_t>(r.mapping.image().begin(), r.mapping.image().end()),
            (std::vector<std::size_t>{0, 0, 1, 2, 1, 3, 2, 2}));
  ASSERT_EQ(r.provenance.size(), 4u);
  EXPECT_EQ(r.provenance[2].target, "y3");
  EXPECT_EQ(r.provenance[2].sources, (std::vector<std::string>{"x4", "x7", "x8"}));
  auto cars = sample::cars();
  for (const auto& nc : cars.coverings())
    EXPECT_TRUE(covering_equal(preimage_covering(r.mapping, r.image.get(nc.name)), nc.covering)) << nc.name;
}

TEST(Infosys, ReductReport) {
  auto s = sample::cars();
  auto rep = reduct_report(s);
  EXPECT_EQ(rep.superfluous, (std::vector<std::string>{"appearance"}));
  EXPECT_NE(std::find(rep.reducts.begin(), rep.reducts.end(),
                      std::vector<std::string>{"price", "structure", "size"}),
            rep.reducts.end());
  EXPECT_EQ(reduct_report(build_homomorphism(s).image), rep);
  EXPECT_EQ(code_of([&] { reduct_report(s, 3); }), Errc::size_guard);
}

TEST(Infosys, FamilyIntersection) {
  auto s = sample::cars();
  std::vector<std::string> none;
  EXPECT_EQ(code_of([&] { family_intersection(s, none); }), Errc::empty_subset);
  std::vector<std::string> three{"price", "structure", "size"};
  EXPECT_TRUE(covering_equal(family_intersection(s, three), family_intersection(s)));
  std::vector<std::string> bad{"colour"};
  EXPECT_EQ(code_of([&] { family_intersection(s, bad); }), Errc::unknown_covering);
}

TEST(Infosys, IncrementalUpdates) {
  auto full = sample::cars();
  FuzzyCoveringSystem three(sample::u8(), {{"price", sample::car_price()},
                                          {"structure", sample::car_structure()},
                                          {"size", sample::car_size()}});
  auto t = PartitionTable::build(three);
  auto added = add_covering(three, t, {"appearance", sample::car_appearance()});
  EXPECT_EQ(added.table, PartitionTable::build(full));
  EXPECT_EQ(added.table.family_partition(), t.family_partition());
  EXPECT_EQ(added.compression, build_homomorphism(full));

  auto removed = remove_covering(added.system, added.table, "appearance");
  EXPECT_EQ(removed.compression, build_homomorphism(three));
  EXPECT_EQ(removed.table, t);

  auto again = add_covering(removed.system, removed.table, {"appearance", sample::car_appearance()});
  EXPECT_EQ(again.compression, added.compression);

  auto copy = add_covering(three, t, {"price2", sample::car_price()});
  EXPECT_EQ(copy.table.family_partition(), t.family_partition());

  EXPECT_EQ(code_of([&] { add_covering(three, t, {"price", sample::car_price()}); }), Errc::duplicate_name);
  EXPECT_EQ(code_of([&] { add_covering(three, t, {"x", sample::primed_covering()}); }), Errc::universe_mismatch);
  EXPECT_EQ(code_of([&] { remove_covering(three, t, "colour"); }), Errc::unknown_covering);
  FuzzyCoveringSystem one(sample::u8(), {{"price", sample::car_price()}});
  EXPECT_EQ(code_of([&] { remove_covering(one, PartitionTable::build(one), "price"); }), Errc::last_covering);
}
