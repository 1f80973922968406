#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordk/cli.hpp"

using namespace ordk;
using nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(ORDK_DATA_DIR) + "/" + name; }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("ordk_cli_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, CohomologyCircle) {
  const CliResult r = run({"cohomology", "--complex", data("circle.json"), "--dim", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "H^1(K; Z2) rank 1"));
  const CliResult j = run({"cohomology", "--complex", data("circle.json"), "--dim", "1", "--json"});
  EXPECT_EQ(json::parse(j.out)["results"]["rank"], 1);
}

TEST(Cli, ClassifyMobiusVsTrivial) {
  const CliResult r = run({"classify", "--bundle", data("mobius_bundle.json"), "--bundle", data("trivial_bundle.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "distinct"));
}

TEST(Cli, GroupTotalDiagonal) {
  const CliResult r = run({"group", "--file", data("group_diagonal.json"), "--check", "total"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "not totally ordered; kernel (1,-1)"));
}

TEST(Cli, GroupChecks) {
  EXPECT_TRUE(contains(run({"group", "--file", data("group_sqrt2.json"), "--check", "positive", "--element", "-1,1"}).out,
                       "is positive"));
  EXPECT_TRUE(contains(run({"group", "--file", data("group_sqrt2.json"), "--check", "compare", "--element", "1,1",
                            "--element", "0,2"})
                           .out,
                       "Less"));
  EXPECT_TRUE(contains(run({"group", "--file", data("group_simplicial3.json"), "--check", "quotient", "--subset", "0"}).out,
                       "quotient"));
  const CliResult bad = run({"group", "--file", data("group_sqrt2.json"), "--check", "ideal", "--subset", "0"});
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, DemoKronecker) {
  const CliResult rational = run({"demo-kronecker", "--slope", "2/3"});
  EXPECT_EQ(rational.code, 0);
  EXPECT_TRUE(contains(rational.out, "rational: kernel span (2,-3); not totally ordered"));
  EXPECT_TRUE(contains(rational.out, "distinct classes (2 classes total over S¹)"));
  const CliResult irrational = run({"demo-kronecker", "--slope", "√2", "--subdivisions", "5"});
  EXPECT_EQ(irrational.code, 0);
  EXPECT_TRUE(contains(irrational.out, "irrational: simple, totally ordered; unique state x+√2·y"));
  EXPECT_TRUE(contains(irrational.out, "distinct classes (2 classes total over S¹)"));
  EXPECT_EQ(run({"demo-kronecker", "--slope", "2/0"}).code, 2);
  EXPECT_EQ(run({"demo-kronecker", "--slope", "1", "--subdivisions", "2"}).code, 1);
}

TEST(Cli, ApproxIsMarked) {
  const CliResult r = run({"states", "--file", data("group_sqrt2.json"), "--unit", "1,0", "--element", "1,1", "--approx"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "approx 2.414214"));
  const CliResult j = run({"states", "--file", data("group_sqrt2.json"), "--unit", "1,0", "--element", "1,1", "--approx", "--json"});
  const json v = json::parse(j.out)["results"]["natural_map"][0];
  EXPECT_EQ(v["exact"], "1+1√2");
  EXPECT_TRUE(v.contains("approx"));
}

TEST(Cli, SwSectionsAndParityNote) {
  const CliResult r = run({"sw", "--rank", "3", "--sections", "2", "--nu", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "forced zero degrees: 2 3"));
  EXPECT_TRUE(contains(r.out, "warning: obstruction coefficients"));
  const CliResult inv = run({"sw", "--complex", data("rp2.json"), "--file", data("total_line_circle.json")});
  EXPECT_NE(inv.code, 0);  // the class names an edge absent from RP²
}

TEST(Cli, EnumerateAndTrivialize) {
  EXPECT_TRUE(contains(run({"enumerate", "--complex", data("torus.json")}).out, "4 classes"));
  EXPECT_TRUE(contains(run({"trivialize", "--bundle", data("mobius_bundle.json")}).out, "odd cycle"));
  EXPECT_TRUE(contains(run({"trivialize", "--bundle", data("trivial_bundle.json")}).out, "trivial, gauge"));
}

TEST(Cli, FramesAndCup) {
  const CliResult f = run({"frames", "--file", data("frame_a.json"), "--file", data("frame_b.json")});
  EXPECT_EQ(f.code, 0);
  EXPECT_TRUE(contains(f.out, "different oriented planes"));
  const CliResult c = run({"cup", "--complex", data("rp2.json"), "--file", data("cochain_rp2_w1.json"), "--file",
                     data("cochain_rp2_w1.json")});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(contains(c.out, "class nonzero in H^2"));
}

TEST(Cli, JsonOutputRoundTrips) {
  const CliResult r = run({"enumerate", "--complex", data("circle.json"), "--json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  const auto circle = std::make_shared<const SimplicialComplex>(
      io::parse_complex(io::read_json_file(data("circle.json")), false).complex);
  for (const auto& entry : j["results"]["classes"]) {
    const GroupBundle b = io::parse_bundle(entry["bundle"]);
    EXPECT_EQ(io::to_json(b), entry["bundle"]);
    EXPECT_EQ(io::parse_cochain(entry["w1"], *circle), w1_class(b).representative);
  }
  const CliResult g = run({"group", "--file", data("group_sqrt2.json"), "--json"});
  const json gj = json::parse(g.out)["results"]["group"];
  EXPECT_EQ(io::to_json(io::parse_group(gj)), gj);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"cohomology"}).code, 2);
  EXPECT_EQ(run({"cohomology", "--complex", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"cohomology", "--complex", temp_file("broken.json", "{not json")}).code, 2);
  EXPECT_EQ(run({"cohomology", "--complex", data("circle.json"), "--dim", "x"}).code, 2);
  EXPECT_EQ(run({"cohomology", "--complex", temp_file("range.json", R"({"vertices": 2, "simplices": [[0, 4]]})")}).code,
            1);
  EXPECT_EQ(run({"cohomology", "--complex", temp_file("missing.json", R"({"vertices": 3})")}).code, 2);
  EXPECT_EQ(run({"cohomology", "--complex", data("rp2.json"), "--strict"}).code, 1);
  const std::string violation = temp_file(
      "cocycle.json",
      R"({"complex": {"vertices": 3, "simplices": [[0,1,2]]}, "rank": 2, "vertex_normals": {"0": ["1","1/2"], "1": ["1","1/2"], "2": ["1","1/2"]}, "edge_signs": {"[0,1]": -1}})");
  const CliResult v = run({"trivialize", "--bundle", violation});
  EXPECT_EQ(v.code, 1);
  EXPECT_TRUE(contains(v.err, "(0,1,2)"));
  EXPECT_EQ(run({"group", "--file", data("group_sqrt2.json"), "--check", "nonsense"}).code, 2);
  EXPECT_EQ(run({"group", "--file", data("group_sqrt2.json"), "--check", "positive", "--element", "1,a"}).code, 2);
  EXPECT_EQ(run({"classify", "--bundle", data("mobius_bundle.json")}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, FormatQuad) {
  EXPECT_EQ(cli::format_quad(QuadExact(0, 1, 2)), "√2");
  EXPECT_EQ(cli::format_quad(QuadExact(0, -1, 2)), "-√2");
  EXPECT_EQ(cli::format_quad(QuadExact(1, Rational(-3, 2), 5)), "1-3/2√5");
  EXPECT_EQ(cli::format_quad(QuadExact(Rational(2, 3))), "2/3");
}
