#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "mcmd/cli.hpp"
#include "mcmd/io.hpp"
#include "mcmd/solvers.hpp"

using namespace mcmd;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mcmd-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

const char* kTwoFar = R"({"version":1,"disks":[{"id":1,"x":"0","y":"0","r":"1"},{"id":2,"x":"10","y":"0","r":"1"}]})";

}  // namespace

TEST_F(Cli, SolveCollinearWritesAssignment) {
  write("in.json", kTwoFar);
  ASSERT_EQ(run({"solve", "--collinear", path("in.json"), "-o", path("phi.json")}), 0) << err_.str();
  auto report = nlohmann::json::parse(out_.str());
  EXPECT_EQ(report["cardinality"], 2);
  EXPECT_EQ(report["status"], "FEASIBLE");
  EXPECT_EQ(io::parse_assignment(read("phi.json")), Assignment::identity(2));
}

TEST_F(Cli, VerifyValidPair) {
  write("in.json", kTwoFar);
  write("phi.json", io::serialize_assignment(Assignment::identity(2)));
  EXPECT_EQ(run({"verify", path("in.json"), path("phi.json"), "--mode", "max"}), 0);
  EXPECT_EQ(out_.str().substr(0, 2), "OK");
}

TEST_F(Cli, VerifyFailureExitsTwo) {
  write("in.json", io::serialize_instance(fixtures::no_proper()));
  write("phi.json", io::serialize_assignment(fixtures::no_proper_relaxed_phi()));
  EXPECT_EQ(run({"verify", path("in.json"), path("phi.json")}), 2);
  EXPECT_EQ(run({"verify", "--relaxed", path("in.json"), path("phi.json")}), 0);
}

TEST_F(Cli, InfeasibleIsSuccess) {
  write("in.json", io::serialize_instance(fixtures::no_proper()));
  EXPECT_EQ(run({"solve", "--exact", path("in.json")}), 0);
  EXPECT_EQ(nlohmann::json::parse(out_.str())["status"], "INFEASIBLE");
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}), 1);
  EXPECT_EQ(run({"frobnicate"}), 1);
  EXPECT_EQ(run({"solve", "--bogus", "x"}), 1);
  write("in.json", kTwoFar);
  EXPECT_EQ(run({"solve", path("in.json")}), 1);
  EXPECT_EQ(run({"solve", "--collinear", "--relaxed", path("in.json")}), 1);
  EXPECT_EQ(run({"--mode", "avg", "solve", "--exact", path("in.json")}), 1);
  EXPECT_EQ(run({"reduce", "partition", "--values", "1,x"}), 1);
}

TEST_F(Cli, BadInputFileReportsError) {
  write("in.json", R"({"version":1,"disks":[{"id":1,"x":"0","y":"0","r":"0"}]})");
  EXPECT_EQ(run({"solve", "--exact", path("in.json")}), 1);
  EXPECT_NE(err_.str().find("NON_POSITIVE_RADIUS"), std::string::npos) << err_.str();
}

TEST_F(Cli, ReducePartition) {
  ASSERT_EQ(run({"reduce", "partition", "--values", "1,1", "--e", "1/2", "-o", path("out.json")}), 0);
  auto inst = io::parse_instance(read("out.json"));
  ASSERT_EQ(inst.size(), 6u);
  EXPECT_EQ(inst.radius(1), 4);
  EXPECT_EQ(inst.centre(2).x, 6);
  EXPECT_EQ(inst.centre(3).y, Rational(11, 2));
}

TEST_F(Cli, ReduceSatWritesArtifact) {
  auto f = reductions::builtin_fixtures()[0];
  write("f.json", io::serialize_formula(f.formula));
  write("rep.json", io::serialize_rep(f.rep));
  ASSERT_EQ(run({"reduce", "sat", path("f.json"), path("rep.json"), "-o", path("out.json")}), 0) << err_.str();
  auto doc = io::parse_instance_document(read("out.json"));
  EXPECT_EQ(doc.metadata["kind"], "sat-reduction");
  EXPECT_GT(doc.instance.size(), 100u);
}

TEST_F(Cli, Equalize) {
  write("in.json", R"({"version":1,"disks":[{"id":1,"x":"0","y":"0","r":"2"}]})");
  ASSERT_EQ(run({"equalize", "--r", "1", path("in.json")}), 0);
  auto doc = io::parse_instance_document(out_.str());
  EXPECT_EQ(doc.instance.size(), 2u);
  EXPECT_EQ(doc.metadata["origin"], nlohmann::json::array({1, 1}));
  write("bad.json", R"({"version":1,"disks":[{"id":1,"x":"0","y":"0","r":"3/2"}]})");
  EXPECT_EQ(run({"equalize", "--r", "1", path("bad.json")}), 1);
}

TEST_F(Cli, GenIsDeterministicAndArtifactsReverify) {
  ASSERT_EQ(run({"gen", "--n", "7", "--profile", "collinear", "--seed", "42", "-o", path("a.json")}), 0);
  ASSERT_EQ(run({"gen", "--n", "7", "--profile", "collinear", "--seed", "42", "-o", path("b.json")}), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
  for (const char* mode : {"max", "sum"}) {
    ASSERT_EQ(run({"--mode", mode, "solve", "--collinear", path("a.json"), "-o", path("phi.json")}), 0);
    if (nlohmann::json::parse(out_.str())["status"] == "FEASIBLE")
      EXPECT_EQ(run({"--mode", mode, "verify", path("a.json"), path("phi.json")}), 0);
  }
}

TEST_F(Cli, Render) {
  write("in.json", io::serialize_instance(fixtures::best_four()));
  write("phi.json", io::serialize_assignment(fixtures::best_four_phi()));
  ASSERT_EQ(run({"render", path("in.json"), path("phi.json"), "-o", path("out.svg")}), 0);
  EXPECT_EQ(read("out.svg"), io::render_svg(fixtures::best_four(), fixtures::best_four_phi()));
  write("bad.json", io::serialize_assignment(Assignment::identity(5)));
  EXPECT_EQ(run({"render", path("in.json"), path("bad.json"), "-o", path("bad.svg")}), 2);
}

TEST(Generate, EmptyAndCollinear) {
  EXPECT_TRUE(cli::generate_random(0, cli::Profile::kPlanar, 3).empty());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = cli::generate_random(9, cli::Profile::kCollinear, seed);
    EXPECT_TRUE(solvers::collinearity_check(inst));
    for (const auto& d : inst.disks()) {
      EXPECT_GE(d.radius, Rational(1, 4));
      EXPECT_LE(d.radius, 2);
    }
  }
  EXPECT_EQ(cli::generate_random(9, cli::Profile::kPlanar, 8), cli::generate_random(9, cli::Profile::kPlanar, 8));
}
