#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fcov/document.hpp"
#include "fcov/verify/generators.hpp"
#include "fcov/verify/sample_data.hpp"

using namespace fcov;
namespace sample = fcov::verify::sample;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SystemDocument fixture(const char* name) { return parse_document(slurp(fs::path(FCOV_FIXTURE_DIR) / name)); }

Error error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e;
  }
  return Error(Errc::internal_inconsistency, "no error");
}

void expect_same_system(const FuzzyCoveringSystem& a, const FuzzyCoveringSystem& b) {
  ASSERT_EQ(a.names(), b.names());
  for (const auto& n : a.names()) EXPECT_TRUE(covering_equal(a.get(n), b.get(n))) << n;
}

}  // namespace

TEST(Document, FixturesMatchInCodeData) {
  auto cars = fixture("cars.json");
  EXPECT_EQ(cars.universe().size(), 8u);
  expect_same_system(cars.system, sample::cars());
  ASSERT_EQ(cars.warnings.size(), 1u);
  EXPECT_NE(cars.warnings[0].find("A2"), std::string::npos);

  auto houses = fixture("houses.json");
  expect_same_system(houses.system, sample::houses());
  EXPECT_EQ(houses.set("high_A"), sample::high_a());
  EXPECT_EQ(houses.set("high_B"), sample::high_b());

  auto primed = fixture("primed.json");
  EXPECT_TRUE(covering_equal(primed.system.get("C'"), sample::primed_covering()));
  EXPECT_EQ(primed.mapping("f").image().size(), 4u);
  EXPECT_TRUE(std::equal(primed.mapping("f").image().begin(), primed.mapping("f").image().end(),
                         sample::alternating_map().image().begin()));

  auto three = fixture("neighborhoods.json");
  ASSERT_EQ(three.system.size(), 3u);
  auto family = sample::three_coverings();
  for (const auto& nc : family.coverings())
    EXPECT_TRUE(covering_equal(three.system.get(nc.name), nc.covering));

  auto rough = fixture("roughness.json");
  EXPECT_TRUE(covering_equal(rough.system.get("C"), sample::members({21, 22, 23})));
}

TEST(Document, RoundTripOnFixtures) {
  for (const auto& e : fs::directory_iterator(FCOV_FIXTURE_DIR)) {
    if (e.path().extension() != ".json") continue;
    auto doc = parse_document(slurp(e.path()));
    auto text = serialize_document(doc);
    auto again = parse_document(text);
    EXPECT_EQ(again, doc) << e.path();
    EXPECT_EQ(serialize_document(again), text) << e.path();
  }
}

TEST(Document, RoundTripOnRandomSystems) {
  verify::Generator gen(7);
  for (int i = 0; i < 200; ++i) {
    auto s = gen.system(gen.universe(6), 4, 5);
    auto doc = document_of(s);
    auto again = parse_document(serialize_document(doc));
    ASSERT_EQ(again, doc);
  }
}

TEST(Document, ThirdsRoundTripAsFractions) {
  Universe u = Universe::indexed(2);
  auto c = make_covering(u, {{"A", make_fuzzy_set(u, {"1/3", "1"}, 3)}});
  auto doc = document_of(FuzzyCoveringSystem(u, {{"C", c}}));
  auto text = serialize_document(doc);
  EXPECT_NE(text.find("\"1/3\""), std::string::npos);
  EXPECT_EQ(parse_document(text), doc);
}

TEST(Document, DiagnosticsCarryLocations) {
  const std::string head = R"({"format_version": 1, "denominator": 10, "universe": ["a", "b"], "coverings": )";
  auto off = error_of(head + R"([{"name": "C", "sets": [{"name": "A", "memberships": ["1", "0.25"]}]}]})");
  EXPECT_EQ(off.code(), Errc::grade_off_grid);
  EXPECT_NE(off.location().find("/coverings/0/sets/0/memberships/1"), std::string::npos) << off.location();

  auto gap = error_of(head + R"([{"name": "C", "sets": [{"name": "A", "memberships": ["1", "0"]}]}]})");
  EXPECT_EQ(gap.code(), Errc::coverage_gap);
  EXPECT_NE(gap.location().find("/coverings/0"), std::string::npos);

  auto len = error_of(head + R"([{"name": "C", "sets": [{"name": "A", "memberships": ["1"]}]}]})");
  EXPECT_EQ(len.code(), Errc::length_mismatch);

  EXPECT_EQ(error_of(head + "[]}").code(), Errc::parse_error);
  EXPECT_EQ(error_of(R"({"universe": ["a", "a"], "coverings": []})").code(), Errc::invalid_universe);
  EXPECT_EQ(error_of(R"({"format_version": 2, "universe": ["a"], "coverings": []})").code(), Errc::parse_error);

  auto bad = error_of("{\n  \"universe\": [\n    \"a\",\n  ]\n}");
  EXPECT_EQ(bad.code(), Errc::parse_error);
  EXPECT_NE(bad.location().find("line 4"), std::string::npos) << bad.location();
}

TEST(Document, DenominatorOverride) {
  auto text = slurp(fs::path(FCOV_FIXTURE_DIR) / "roughness.json");
  EXPECT_EQ(parse_document(text, 20).denominator, 20u);
  try {
    parse_document(text, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::grade_off_grid);
  }
}
