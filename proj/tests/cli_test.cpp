#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "harness.hpp"

namespace bitrev::bench {
namespace {

int run(std::vector<std::string> args, std::string& out, std::string& err) {
  args.insert(args.begin(), "bitrev-bench");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream o, e;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str();
  err = e.str();
  return code;
}

TEST(ParseRange, Forms) {
  EXPECT_EQ(parse_range("8..20"), (std::pair<unsigned, unsigned>{8, 20}));
  EXPECT_EQ(parse_range("12"), (std::pair<unsigned, unsigned>{12, 12}));
  EXPECT_THROW(parse_range("20..8"), std::invalid_argument);
  EXPECT_THROW(parse_range("a..b"), std::invalid_argument);
  EXPECT_THROW(parse_range(""), std::invalid_argument);
}

TEST(ParseMethodList, Forms) {
  EXPECT_EQ(parse_method_list("all").size(), kAllMethods.size());
  EXPECT_EQ(parse_method_list("xor,cobra,xor"),
            (std::vector<Method>{Method::kXor, Method::kCobra}));
  EXPECT_THROW(parse_method_list("xor,fft"), std::invalid_argument);
}

TEST(Cli, RunWritesCsvAndVerifies) {
  const auto path = std::filesystem::temp_directory_path() / "bitrev_cli_run.csv";
  std::string out, err;
  const int code = run({"run", "--methods", "bitwise,semirecursive", "--bits", "8..12",
                        "--replicates", "3", "--warmup", "1", "--verify", "--out", path.string()},
                       out, err);
  ASSERT_EQ(code, 0) << err;
  EXPECT_NE(err.find("all permutations match"), std::string::npos) << err;
  EXPECT_EQ(read_csv(path).size(), 2u * 5u * 3u);
  std::filesystem::remove(path);
}

TEST(Cli, RunToStdout) {
  std::string out, err;
  ASSERT_EQ(run({"run", "--methods", "xor", "--bits", "6", "--replicates", "2", "--cobra-q",
                 "auto", "--element", "u64"},
                out, err),
            0)
      << err;
  std::istringstream in(out);
  EXPECT_EQ(read_csv(in).size(), 2u);
}

TEST(Cli, VerifySubcommand) {
  std::string out, err;
  ASSERT_EQ(run({"verify", "--bits", "10", "--trials", "2"}, out, err), 0) << out << err;
  EXPECT_NE(out.find("PASS parallel b=1..10"), std::string::npos);
  EXPECT_NE(out.find("PASS swap counts b=1..10"), std::string::npos);
  EXPECT_EQ(out.find("FAIL"), std::string::npos);
}

TEST(Cli, TuneCobraSubcommand) {
  std::string out, err;
  ASSERT_EQ(run({"tune-cobra", "--bits", "12", "--q", "1..3", "--replicates", "2"}, out, err), 0)
      << err;
  EXPECT_NE(err.find("best q="), std::string::npos);
  std::istringstream in(out);
  EXPECT_EQ(read_csv(in).size(), 6u);
}

TEST(Cli, ErrorsReturnNonZero) {
  std::string out, err;
  EXPECT_EQ(run({"run", "--methods", "nope"}, out, err), 2);
  EXPECT_NE(err.find("unknown method"), std::string::npos);
  EXPECT_EQ(run({"run", "--bits", "8..40"}, out, err), 2);
  EXPECT_EQ(run({"run", "--cobra-q", "x"}, out, err), 2);
  EXPECT_NE(run({}, out, err), 0);
  EXPECT_NE(run({"tune-cobra"}, out, err), 0);
  EXPECT_EQ(run({"tune-cobra", "--bits", "6", "--q", "1..4"}, out, err), 2);
}

}  // namespace
}  // namespace bitrev::bench
