#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "braidcong/cli.hpp"

using namespace braidcong;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "braidcong");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("braidcong_cli_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST(Cli, BurauMatrix) {
  const CliRun r = run({"burau", "matrix", "--n", "3", "--word", "3: 1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, format_matrix(integral_burau(BraidWord(3, {1}))));
}

TEST(Cli, BurauMatrixModularAndLaurent) {
  EXPECT_EQ(run({"burau", "matrix", "--n", "3", "--word", "1 2", "--mod", "4"}).out,
            format_matrix(reduce_mod(integral_burau(BraidWord(3, {1, 2})), 4)));
  EXPECT_EQ(run({"burau", "matrix", "--n", "2", "--word", "1", "--laurent"}).out, format_matrix(unreduced_burau(BraidWord(2, {1}))));
}

TEST(Cli, MalformedWordIsUsageError) {
  EXPECT_EQ(run({"burau", "matrix", "--n", "3", "--word", "3: 7"}).code, 2);
  EXPECT_EQ(run({"burau", "matrix", "--n", "4", "--word", "3: 1"}).code, 2);
}

TEST(Cli, UnknownSubcommandIsUsageError) {
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, ShadowCheckPasses) {
  const CliRun r = run({"finquot", "check-thm41", "--n", "3", "--m", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("status: PASS"), std::string::npos);
}

TEST(Cli, ReportsAreDeterministic) {
  const CliRun a = run({"finquot", "check-mennicke", "--g", "1", "--m", "3"});
  const CliRun b = run({"finquot", "check-mennicke", "--g", "1", "--m", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ElementCapIsBudgetError) {
  const CliRun r = run({"finquot", "enum", "--n", "3", "--mod", "6", "--cap", "10"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("budget exceeded"), std::string::npos);
}

TEST(Cli, EnvironmentOverridesDefaultCap) {
  ::setenv("BRAIDCONG_ELEMENT_CAP", "10", 1);
  EXPECT_EQ(run({"finquot", "enum", "--n", "3", "--mod", "6"}).code, 2);
  EXPECT_EQ(run({"finquot", "enum", "--n", "3", "--mod", "6", "--cap", "1000"}).code, 0);
  ::setenv("BRAIDCONG_ELEMENT_CAP", "ten", 1);
  EXPECT_EQ(run({"finquot", "enum", "--n", "3", "--mod", "6"}).code, 2);
  ::unsetenv("BRAIDCONG_ELEMENT_CAP");
  EXPECT_EQ(run({"finquot", "enum", "--n", "3", "--mod", "6"}).code, 0);
}

TEST(Cli, EnumClosureFilter) {
  EXPECT_NE(run({"finquot", "enum", "--n", "3", "--mod", "5"}).out.find("ambient_order: 120"), std::string::npos);
  EXPECT_NE(run({"finquot", "closure", "--n", "3", "--mod", "4", "--m", "2"}).out.find("closure_order: 8"), std::string::npos);
  EXPECT_NE(run({"finquot", "filter", "--n", "3", "--mod", "4", "--m", "2"}).out.find("filter_order: 8"), std::string::npos);
}

TEST(Cli, CosetOrders) {
  EXPECT_NE(run({"cosets", "order", "--preset", "braid", "--n", "3", "--m", "4"}).out.find("order: 96"), std::string::npos);
  EXPECT_NE(run({"cosets", "order", "--preset", "vondyck", "--m", "4", "--strategy", "hlt"}).out.find("order: 24"), std::string::npos);
  EXPECT_NE(run({"cosets", "order", "--preset", "braid", "--n", "3", "--m", "5", "--relator", "1 2 1 2 1 2"}).out.find("order: 60"),
            std::string::npos);
  const std::string path = temp_path("pres.txt");
  write_file(path, "# Z/5\n1 1 1 1 1\n");
  EXPECT_NE(run({"cosets", "order", "--presentation", path}).out.find("order: 5"), std::string::npos);
  EXPECT_EQ(run({"cosets", "order", "--preset", "vondyck", "--m", "7", "--coset-cap", "1000"}).code, 2);
}

TEST(Cli, FactorizeThenVerify) {
  const std::string path = temp_path("cert.txt");
  EXPECT_EQ(run({"factorize", "--n", "2", "--m", "1", "--x", "1", "--out", path}).code, 0);
  const CliRun v = run({"verify", "--cert", path});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("status: PASS"), std::string::npos);

  EXPECT_EQ(run({"factorize", "--n", "5", "--m", "2", "--x", "1,1,1,1", "--out", path}).code, 0);
  EXPECT_EQ(run({"verify", "--cert", path}).code, 0);
  std::ifstream in(path);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  write_file(path, header + "\n" + "1" + first + "\n" + rest);  // prepend a digit to the first exponent
  EXPECT_EQ(run({"verify", "--cert", path}).code, 1);
}

TEST(Cli, FactorizeRejectsBadVector) {
  EXPECT_EQ(run({"factorize", "--n", "3", "--m", "1", "--x", "1"}).code, 2);
  EXPECT_EQ(run({"factorize", "--n", "3", "--m", "1", "--x", "1,z"}).code, 2);
}

TEST(Cli, KernelFactorize) {
  const auto ctx = StabilizerContext::standard(2, 2);
  const std::string path = temp_path("kernel.txt");
  write_file(path, format_matrix(build_S_x(ctx, LatticeVector{1, 0, 2, -1})));
  const CliRun ok = run({"spcong", "kernel-factorize", "--g", "2", "--m", "2", "--matrix", path});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.rfind("2 2\n", 0), 0u);
  write_file(path, format_matrix(ctx.form().transvection(LatticeVector{0, 0, 1, 0})));
  EXPECT_EQ(run({"spcong", "kernel-factorize", "--g", "2", "--m", "2", "--matrix", path}).code, 1);
  EXPECT_EQ(run({"spcong", "kernel-factorize", "--g", "2", "--m", "2", "--matrix", temp_path("missing")}).code, 2);
}

TEST(Cli, QuickSuitePasses) {
  const CliRun r = run({"suite", "--quick"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("status: PASS"), std::string::npos);
}

TEST(Cli, ExternalBinaryExitCodes) {
  const std::string bin = BRAIDCONG_CLI_PATH;
  EXPECT_EQ(std::system((bin + " finquot check-lemma42 --n 3 --r 1 > /dev/null").c_str()), 0);
  EXPECT_NE(std::system((bin + " bogus > /dev/null 2>&1").c_str()), 0);
}
