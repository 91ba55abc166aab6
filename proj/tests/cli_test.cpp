#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

namespace dcover {
namespace {

using testing::data_path;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Chi) {
  const CliRun r = run({"chi", data_path("kite.col")});
  EXPECT_EQ(r.code, cli::exit_ok);
  EXPECT_EQ(r.out, "chi 3\n");
  const CliRun w = run({"chi", data_path("k4.col"), "--witness"});
  EXPECT_EQ(w.out, "chi 4\ns 4\nv 1 1\nv 2 2\nv 3 3\nv 4 4\n");
}

TEST(Cli, ChiErrors) {
  EXPECT_EQ(run({"chi", data_path("malformed.col")}).code, cli::exit_usage);
  EXPECT_EQ(run({"chi", data_path("kite.col"), "--limit", "3"}).code, cli::exit_size_guard);
  EXPECT_EQ(run({"chi"}).code, cli::exit_usage);
  EXPECT_EQ(run({}).code, cli::exit_usage);
  EXPECT_EQ(run({"--help"}).code, cli::exit_ok);
}

TEST(Cli, ChiRel) {
  const CliRun both = run({"chi-rel", data_path("kite.col"), data_path("kite_h1.col"), "--method", "both"});
  EXPECT_EQ(both.code, cli::exit_ok);
  EXPECT_EQ(both.out, "chi_rel_direct 3\nchi_rel_cover 3\nchi_rel 3\n");
  const CliRun cover = run({"chi-rel", data_path("kite.col"), data_path("kite_h2.col"), "--method", "cover"});
  EXPECT_EQ(cover.out, "chi_rel 2\n");
  const CliRun w = run({"chi-rel", data_path("kite.col"), data_path("kite_h2.col"), "--witness"});
  EXPECT_NE(w.out.find("chi_rel 2\nc f\ns 2\n"), std::string::npos);
  EXPECT_NE(w.out.find("c g\ns 2\n"), std::string::npos);
  EXPECT_EQ(run({"chi-rel", data_path("kite.col"), data_path("kite_not_sub.col")}).code, cli::exit_mismatch);
  EXPECT_EQ(run({"chi-rel", data_path("kite.col"), data_path("kite_h1.col"), "--method", "other"}).code,
            cli::exit_usage);
}

TEST(Cli, Cover) {
  const CliRun plus = run({"cover", data_path("k3_plus.sg")});
  EXPECT_EQ(plus.code, cli::exit_ok);
  EXPECT_EQ(plus.out.rfind("p edge 6 6\n", 0), 0U);
  EXPECT_NE(plus.out.find("c f 6 3 2\n"), std::string::npos);
  const CliRun twisted = run({"cover", data_path("k3_twisted.sg")});
  EXPECT_EQ(twisted.out.rfind("p edge 6 6\n", 0), 0U);
  EXPECT_EQ(run({"cover", data_path("bad_inverse.pvg")}).code, cli::exit_voltage);
}

TEST(Cli, CoverToFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "dcover_cli_test";
  std::filesystem::create_directories(dir);
  const std::string out = (dir / "fold4.col").string();
  const CliRun r = run({"cover", data_path("kite_fold4.pvg"), "--out", out});
  ASSERT_EQ(r.code, cli::exit_ok);
  EXPECT_TRUE(r.out.empty());
  ASSERT_TRUE(std::filesystem::exists(out + ".fiber"));
  EXPECT_EQ(run({"chi", out}).out, "chi 2\n");
  std::ifstream fiber(out + ".fiber");
  std::string first;
  std::getline(fiber, first);
  EXPECT_EQ(first, "f 1 1 1");
  std::filesystem::remove_all(dir);
}

TEST(Cli, Switch) {
  const CliRun none = run({"switch", data_path("kite.col"), data_path("kite_iso_h.col"), data_path("kite_iso_k.col")});
  EXPECT_EQ(none.code, cli::exit_ok);
  EXPECT_EQ(none.out, "inequivalent\n");
  const CliRun self = run({"switch", data_path("kite.col"), data_path("kite_h1.col"), data_path("kite_h1.col")});
  EXPECT_EQ(self.out, "X = {}\n");
}

TEST(Cli, SwitchClass) {
  EXPECT_EQ(run({"switch-class", data_path("kite.col"), "--count"}).out, "cover_classes 4\n");
  const CliRun members = run({"switch-class", data_path("kite.col"), data_path("kite_h2.col")});
  EXPECT_EQ(members.out.rfind("class_size 8\n", 0), 0U);
  EXPECT_NE(members.out.find("member 8 "), std::string::npos);
  EXPECT_EQ(run({"switch-class", data_path("kite.col")}).code, cli::exit_usage);
}

TEST(Cli, Bounds) {
  const CliRun r = run({"bounds", data_path("kite.col"), data_path("kite_h2.col"), "--exact"});
  EXPECT_EQ(r.code, cli::exit_ok);
  EXPECT_NE(r.out.find("bound cor24 lower=2 upper=2 exhaustive=y"), std::string::npos);
  EXPECT_NE(r.out.find("bound thm31 "), std::string::npos);
  EXPECT_NE(r.out.find("chi_rel 2\n"), std::string::npos);
  const CliRun h1 = run({"bounds", data_path("kite.col"), data_path("kite_h1.col")});
  EXPECT_NE(h1.out.find("c thm34 not applicable"), std::string::npos);
}

TEST(Cli, Verify) {
  const CliRun r = run({"verify", "thm21", "--max-vertices", "4"});
  EXPECT_EQ(r.code, cli::exit_ok);
  EXPECT_NE(r.out.find("thm21: pass"), std::string::npos);
  EXPECT_EQ(run({"verify", "cor36", "--max-vertices", "5"}).code, cli::exit_ok);
  EXPECT_EQ(run({"verify", "nosuch"}).code, cli::exit_usage);
}

}  // namespace
}  // namespace dcover
