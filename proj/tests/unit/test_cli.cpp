#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "antipodal/point_io.hpp"
#include "commands.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "antipodal");
  std::ostringstream out;
  std::ostringstream err;
  const int code = antipodal::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("antipodal_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, GenWritesReadablePoints) {
  const auto path = temp("gen.txt");
  const auto r = run({"gen", "--kind", "arc-center", "--n", "100", "--epsilon", "0.04", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(antipodal::read_points(path).size(), 100u);
  std::filesystem::remove(path);
}

TEST(Cli, GenRejectsUnknownKind) {
  const auto r = run({"gen", "--kind", "hexagon", "--n", "10", "--out", temp("x.txt").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown generator kind"), std::string::npos);
}

TEST(Cli, AnnuliRow) {
  const auto r = run({"annuli", "--d", "0.5", "--epsilon", "0.005", "--thickened"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "d,epsilon,width,height,cover,thickened_cover");
  EXPECT_NE(r.out.find("0.5,0.005,0.0199"), std::string::npos);
  EXPECT_EQ(r.out.substr(r.out.rfind(',') + 1), "100\n");
  EXPECT_EQ(run({"annuli", "--d", "0.01", "--epsilon", "0.005"}).code, 2);
}

TEST(Cli, GraphStatsAndSpectral) {
  const auto path = temp("circle.txt");
  ASSERT_EQ(run({"gen", "--kind", "circle", "--n", "2000", "--out", path.string()}).code, 0);
  const auto stats = run({"graph-stats", "--points", path.string(), "--epsilon", "0.03125"});
  ASSERT_EQ(stats.code, 0) << stats.err;
  EXPECT_EQ(stats.out.substr(0, stats.out.find('\n')), "k,edges,max_degree,max_nbr_deg_sum,max_s_Ts_over_k");
  const auto spectral = run({"spectral", "--points", path.string(), "--epsilon", "0.03125"});
  ASSERT_EQ(spectral.code, 0) << spectral.err;
  EXPECT_EQ(spectral.out.substr(0, spectral.out.find('\n')), "epsilon,k,lambda1,cw,sqrtdeg,trace");
  std::filesystem::remove(path);
}

TEST(Cli, RatioSweepIsDeterministic) {
  const auto a = temp("sweep_a.csv");
  const auto b = temp("sweep_b.csv");
  const std::vector<std::string> base{"sweep", "--kind", "ratio", "--generator", "reuleaux", "--n", "400",
                                      "--eps-start", "0.08", "--eps-factor", "2", "--eps-count", "4",
                                      "--seed", "5", "--out"};
  auto args_a = base;
  args_a.push_back(a.string());
  auto args_b = base;
  args_b.push_back(b.string());
  const auto ra = run(args_a);
  const auto rb = run(args_b);
  ASSERT_EQ(ra.code, 0) << ra.err;
  ASSERT_EQ(rb.code, 0) << rb.err;
  EXPECT_NE(ra.out.find("fit ratio: alpha="), std::string::npos);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_NE(slurp(a).find("reuleaux@5,0.08,400,"), std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, ParseErrorsAndBadGrid) {
  EXPECT_NE(run({}).code, 0);
  EXPECT_NE(run({"sweep", "--kind", "bogus"}).code, 0);
  const auto r = run({"sweep", "--kind", "ratio", "--n", "100", "--eps-start", "0.5", "--eps-factor", "2",
                      "--eps-count", "3", "--out", temp("bad.csv").string()});
  EXPECT_EQ(r.code, 2);
}
