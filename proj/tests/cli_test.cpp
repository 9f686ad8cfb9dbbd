// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace sombor::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kOctanes = std::string(SOMBOR_DATA_DIR) + "/octane_isomers.csv";

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

TEST(CliTest, ComputeOctane) {
  const Result r = invoke({"compute", "--index", "so2", "--smiles", "CCCCCCCC"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "6/5 (1.2)\n");
}

TEST(CliTest, ComputeTsvAndIrrationalIndex) {
  const Result tsv = invoke({"--format", "tsv", "compute", "--smiles", "CCC"});
  EXPECT_EQ(tsv.out, "index\texact\tdecimal\nso2\t6/5\t1.2\n");
  const Result randic = invoke({"compute", "--index", "r", "--smiles", "C(C)(C)(C)C"});
  EXPECT_EQ(randic.out, "2\n");
  const Result mn = invoke({"compute", "--index", "mn", "--smiles", "CCC"});
  EXPECT_EQ(mn.out, "12/1 (12)\n");
}

TEST(CliTest, ComputeFromEdgeListFile) {
  const auto path = std::filesystem::temp_directory_path() / "sombor_cli_star.txt";
  {
    std::ofstream f(path);
    f << "5 4\n0 1\n0 2\n0 3\n0 4\n";
  }
  const Result r = invoke({"compute", "--input", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "60/17 (3.5294117647058822)\n");
  std::filesystem::remove(path);
  EXPECT_EQ(invoke({"compute", "--input", path.string()}).code, 1);
}

TEST(CliTest, ExactAndDecimalAgree) {
  for (const char* smiles : {"CC(C)(C)CC(C)C", "CC(C)C(C)(C)CC", "CCC(C)(CC)CC"}) {
    const Result r = invoke({"--format", "tsv", "compute", "--smiles", smiles});
    std::istringstream in(r.out);
    std::string header, index, exact;
    double decimal = 0.0;
    std::getline(in, header);
    in >> index >> exact >> decimal;
    const auto slash = exact.find('/');
    const double p = std::stod(exact.substr(0, slash)), q = std::stod(exact.substr(slash + 1));
    EXPECT_NEAR(p / q, decimal, 1e-12) << smiles;
  }
}

TEST(CliTest, EnumerateCountsAndEdgeLists) {
  EXPECT_EQ(invoke({"enumerate", "--n", "8", "--molecular", "--emit", "count"}).out, "18\n");
  const Result lists = invoke({"enumerate", "--n", "8"});
  EXPECT_EQ(line_count(lists.out), 23u);
  EXPECT_EQ(lists.out.substr(0, 4), "8 7 ");
}

TEST(CliTest, EnumerationCapFromEnvironment) {
  EXPECT_EQ(invoke({"enumerate", "--n", "19", "--molecular", "--emit", "count"}).code, 1);
  ::setenv("SOMBOR_MAX_N", "19", 1);
  const Result r = invoke({"enumerate", "--n", "19", "--molecular", "--emit", "count"});
  ::setenv("SOMBOR_MAX_N", "zero", 1);
  const Result bad = invoke({"enumerate", "--n", "5", "--emit", "count"});
  ::unsetenv("SOMBOR_MAX_N");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "148284\n");
  EXPECT_EQ(bad.code, 1);
}

TEST(CliTest, ExtremalVerify) {
  const Result r = invoke({"extremal", "--verify-up-to", "10"});
  EXPECT_EQ(r.code, 0);
  ASSERT_GE(r.out.size(), 13u);
  EXPECT_EQ(r.out.substr(r.out.size() - 13), "0 violations\n");
  const Result tsv = invoke({"--format", "tsv", "extremal", "--verify-up-to", "6"});
  EXPECT_NE(tsv.out.find("violations\t0\n"), std::string::npos);
}

TEST(CliTest, ExtremalBoundsAndFamily) {
  const Result r = invoke({"extremal", "--n", "7", "--family", "3", "--maximizers"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("tree_lower: 6/5 (1.2)\n"), std::string::npos);
  EXPECT_NE(r.out.find("molecular_upper: 1924/425"), std::string::npos);
  EXPECT_NE(r.out.find("family_so2: 1924/425"), std::string::npos);
  EXPECT_NE(r.out.find("maximizers: 1\n"), std::string::npos);
  EXPECT_EQ(invoke({"extremal", "--n", "8", "--family", "1"}).code, 1);
  EXPECT_EQ(invoke({"extremal", "--family", "1"}).code, 2);
  EXPECT_EQ(invoke({"extremal"}).code, 2);
}

TEST(CliTest, Fit) {
  const Result r =
      invoke({"fit", "--dataset", kOctanes, "--index", "so2", "--property", "HNar", "--emit-points"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("slope: -0.08"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("name x y y_fit\n"), std::string::npos);
  EXPECT_NE(r.out.find("\noctane 1.2 1.6 "), std::string::npos);
  EXPECT_EQ(invoke({"fit", "--dataset", kOctanes, "--property", "nope"}).code, 1);
}

TEST(CliTest, Parse) {
  const Result r = invoke({"parse", "--smiles", "CC(C)C"});
  EXPECT_EQ(r.out, "4 3\n0 1\n1 2\n1 3\ndegrees: 1 3 1 1\n");
  const Result bad = invoke({"parse", "--smiles", "CC(C"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("position 2"), std::string::npos);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"compute", "--smiles", "C", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"compute", "--index", "so9", "--smiles", "C"}).code, 2);
  EXPECT_EQ(invoke({"compute"}).code, 2);
  EXPECT_EQ(invoke({"--format", "json", "compute", "--smiles", "C"}).code, 2);
  const Result help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("enumerate"), std::string::npos);
}

TEST(CliTest, DeterministicOutput) {
  const std::vector<std::string> args{"extremal", "--n", "14", "--maximizers", "--threads", "3"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, invoke({"extremal", "--n", "14", "--maximizers"}).out);
}

}  // namespace
}  // namespace sombor::cli
