#include <gtest/gtest.h>

#include "ordk/io.hpp"
#include "support/fixtures.hpp"

using namespace ordk;
using nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(ORDK_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Io, ComplexRoundTrip) {
  for (const auto& nc : fixtures::named_complexes()) {
    const auto k = fixtures::build(nc);
    const json j = io::to_json(*k);
    EXPECT_EQ(io::parse_complex(j, true).complex, *k) << nc.name;
    EXPECT_EQ(io::parse_complex(json::parse(j.dump()), false).complex, *k) << nc.name;
  }
}

TEST(Io, ComplexErrors) {
  EXPECT_THROW(io::parse_complex(json::parse(R"({"vertices": 3})"), false), Error);
  EXPECT_THROW(io::parse_complex(json::parse(R"({"vertices": 2, "simplices": [[0, 5]]})"), false), Error);
  EXPECT_THROW(io::parse_complex(json::parse(R"({"vertices": 3, "simplices": [[0, 1, 2]]})"), true), Error);
  try {
    io::parse_complex(json::parse(R"({"vertices": "x", "simplices": []})"), false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
  }
}

TEST(Io, CochainRoundTrip) {
  const auto k = fixtures::torus();
  for (const auto& c : cohomology(*k, 1).representatives) {
    EXPECT_EQ(io::parse_cochain(io::to_json(*k, c), *k), c);
  }
  const json j = json::parse(R"({"dim": 1, "support": [[1, 0]]})");
  EXPECT_EQ(io::parse_cochain(j, *k), cochain_from_support(*k, 1, {{0, 1}}));
}

TEST(Io, GroupRoundTrip) {
  const std::vector<OrderedGroup> groups{
      OrderedGroup::hyperplane(LinearFunctional({QuadExact(Rational(-1, 2)), QuadExact(Rational(2, 3), Rational(-5, 7), 3)}, 3)),
      OrderedGroup::hyperplane(LinearFunctional::rational({1, Rational(3, 2), 0})),
      OrderedGroup::simplicial({{1, 1}, {0, 1}}),
      OrderedGroup::standard_simplicial(4)};
  for (const auto& g : groups) EXPECT_EQ(io::parse_group(json::parse(io::to_json(g).dump())), g);
}

TEST(Io, GroupFileFormat) {
  const OrderedGroup g = io::parse_group(io::read_json_file(data("group_sqrt2.json")));
  EXPECT_EQ(g.functional(), LinearFunctional({QuadExact(1), QuadExact(0, 1, 2)}, 2));
  EXPECT_THROW(io::parse_group(json::parse(R"({"rank": 2, "cone": {"type": "hyperplane", "radicand": 4, "normal": ["1", "1"]}})")),
               Error);
  EXPECT_THROW(io::parse_group(json::parse(R"({"rank": 2, "cone": {"type": "round"}})")), Error);
  EXPECT_THROW(io::parse_group(json::parse(R"({"rank": 3, "cone": {"type": "hyperplane", "normal": ["1", "1"]}})")), Error);
}

TEST(Io, FrameRoundTrip) {
  const Frame f(3, {{Rational(1, 2), 0, 3}, {0, Rational(-7, 3), 1}});
  EXPECT_EQ(io::parse_frame(json::parse(io::to_json(f).dump())), f);
  const Frame parsed = io::parse_frame(json::parse(R"({"k": 2, "vectors": [["2","0"],["1","3"]]})"));
  EXPECT_EQ(standard_frame(parsed).orientation, 1);
}

TEST(Io, BundleRoundTrip) {
  std::mt19937_64 rng(6);
  for (const auto& k : {fixtures::circle(), fixtures::torus(), fixtures::rp2()}) {
    for (int i = 0; i < 5; ++i) {
      const GroupBundle b = fixtures::random_bundle(rng, k);
      EXPECT_EQ(io::parse_bundle(json::parse(io::to_json(b).dump())), b);
    }
  }
}

TEST(Io, BundleFiles) {
  const GroupBundle mob = io::parse_bundle(io::read_json_file(data("mobius_bundle.json")));
  const GroupBundle triv = io::parse_bundle(io::read_json_file(data("trivial_bundle.json")));
  EXPECT_FALSE(classify_pair(mob, triv));
  EXPECT_NO_THROW(io::parse_bundle(io::read_json_file(data("rp2_bundle.json"))));
}

TEST(Io, TotalClassRoundTrip) {
  const auto k = fixtures::rp2();
  const Z2Cochain a = cohomology(*k, 1).representatives.at(0);
  const TotalSWClass w = inverse_class(line_bundle_class(k, a), 2);
  EXPECT_EQ(io::parse_total_class(json::parse(io::to_json(w).dump()), k), w);
  EXPECT_THROW(io::parse_total_class(json::parse(R"({"rank": 1, "classes": {}})"), k), Error);
  EXPECT_THROW(io::parse_total_class(json::parse(R"({"rank": 1, "classes": {"0": "one"}})"), k), Error);
}

TEST(Io, MissingFileIsParseError) {
  try {
    io::read_json_file("/nonexistent/file.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
  }
}
