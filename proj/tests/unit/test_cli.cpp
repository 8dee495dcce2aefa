#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kdp/cli.hpp"

using namespace kdp;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Set KDP_UPDATE_GOLDEN=1 to rewrite the expected files.
void check_golden(std::string const& name, std::vector<std::string> args) {
  auto r = run(std::move(args));
  EXPECT_EQ(r.code, kExitVerified) << name << "\n" << r.err;
  std::string path = std::string(KDP_GOLDEN_DIR) + "/" + name;
  if (std::getenv("KDP_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path, std::ios::binary) << r.out;
  }
  EXPECT_EQ(r.out, read_file(path)) << name;
}

}  // namespace

TEST(CliExitCodes, Matrix) {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  std::vector<Case> cases{
      {{"member", "--group", "K2_2_2", "--element", "x | x^-1"}, kExitVerified},
      {{"member", "--group", "K2_2_2", "--element", "x | x"}, kExitFailure},
      {{"member", "--group", "K2_2_2", "--element", "x ) y"}, kExitFailure},
      {{"member", "--group", "K2_2", "--element", "x"}, kExitFailure},
      {{"rewrite", "--group", "K3_2_2", "--random", "12"}, kExitVerified},
      {{"rewrite", "--group", "K2_2_2", "--element", "x | 1"}, kExitFailure},
      {{"rewrite", "--group", "K2_2_2"}, kExitFailure},
      {{"normalize-basis", "--matrix", R"({"m":2,"r":1,"rows":[[2],[3]]})"},
       kExitVerified},
      {{"normalize-basis", "--matrix", R"({"m":2,"r":1,"rows":[[2],[4]]})"},
       kExitFailure},
      {{"normalize-basis", "--matrix", R"({"m":2,"r":1,"rows":[[2],)"}, kExitFailure},
      {{"split", "--n", "3", "--element", "x y | x^-1 | y^-1"}, kExitVerified},
      {{"split", "--n", "3", "--element", "x | 1 | 1"}, kExitFailure},
      {{"area", "--presentation", "<x,y|[x,y]>", "--word", "[x^2,y^2]", "--oracle",
        "abelian"},
       kExitVerified},
      {{"--node-cap", "5", "area", "--presentation", "<x,y|[x,y]>", "--word",
        "[x^3,y^3]", "--oracle", "abelian"},
       kExitInconclusive},
      {{"area", "--presentation", "<x,y|[x,y]>", "--word", "x y", "--oracle",
        "abelian"},
       kExitFailure},
      {{"dehn", "--presentation", "<x,y|[x,y]>", "--n", "4", "--oracle", "abelian"},
       kExitVerified},
      {{"dehn", "--presentation", "<x,y|[x,y]>", "--n", "4", "--oracle", "bogus"},
       kExitFailure},
      {{"metric", "--group", "K2_2_2", "--target", "h(1)"}, kExitVerified},
      {{"--radius", "3", "metric", "--group", "K2_2_2", "--target", "h(2)"},
       kExitInconclusive},
      {{"metric", "--group", "K2_2_2", "--target", "x | 1"}, kExitFailure},
      {{"--radius", "4", "distortion", "--from", "1", "--to", "2"}, kExitVerified},
      {{"certify", "--n", "1"}, kExitVerified},
      {{"certify", "--n", "0"}, kExitFailure},
      {{"toy-amalgam", "--k", "1", "--n", "1"}, kExitVerified},
      {{"--node-cap", "100", "toy-amalgam", "--k", "1", "--n", "2"},
       kExitInconclusive},
      {{"--node-cap", "0", "certify", "--n", "1"}, kExitFailure},
      {{"--format", "xml", "certify", "--n", "1"}, kExitFailure},
      {{}, kExitFailure},
      {{"--help"}, kExitVerified},
  };
  for (auto const& c : cases) {
    auto r = run(c.args);
    std::string joined;
    for (auto const& a : c.args) {
      joined += a + " ";
    }
    EXPECT_EQ(r.code, c.code) << joined << "\n" << r.err;
    if (c.code == kExitFailure) {
      EXPECT_TRUE(!r.err.empty() || r.out.find("false") != std::string::npos)
          << joined;
    }
  }
}

TEST(CliExitCodes, ParseErrorsReportPosition) {
  auto r = run({"member", "--group", "K2_2_2", "--element", "x ) y"});
  EXPECT_EQ(r.err, "parse error at 1:3: unexpected ')'\n");
}

TEST(CliOutput, ElementFormatsAgree) {
  auto a = run({"--format", "json", "member", "--group", "K2_2_2", "--element",
                "x y x^-1 y^-1 | 1"});
  auto b = run({"--format", "json", "member", "--group", "K2_2_2", "--element",
                R"({"factors": ["x y x^-1 y^-1", "1"]})"});
  auto c = run({"--format", "json", "member", "--group", "K2_2_2", "--element",
                "h(1)"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(CliOutput, RandomRewriteFollowsSeed) {
  auto a = run({"--seed", "5", "rewrite", "--group", "K3_2_2", "--random", "9"});
  auto b = run({"--seed", "5", "rewrite", "--group", "K3_2_2", "--random", "9"});
  auto c = run({"--seed", "6", "rewrite", "--group", "K3_2_2", "--random", "9"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST(CliGolden, Outputs) {
  check_golden("member.csv", {"--format", "csv", "member", "--group", "K3_2_2",
                              "--element", "x y | x^-1 | y^-1"});
  check_golden("normalize.json",
               {"--format", "json", "normalize-basis", "--matrix",
                R"({"m":3,"r":2,"rows":[[2,1],[3,1],[0,5]]})"});
  check_golden("split.json", {"--format", "json", "split", "--n", "3", "--element",
                              "x y x^-1 | y x | x^-1 y^-2"});
  check_golden("area.json", {"--format", "json", "area", "--presentation",
                             "<x,y|[x,y]>", "--word", "[x^2,y^2]", "--oracle",
                             "abelian"});
  check_golden("dehn.txt", {"dehn", "--presentation", "<x,y|[x,y]>", "--n", "8",
                            "--oracle", "abelian"});
  check_golden("distortion.csv", {"--format", "csv", "--radius", "5", "distortion",
                                  "--from", "1", "--to", "2"});
  check_golden("certify2.json", {"--format", "json", "certify", "--n", "2"});
  check_golden("toy11.txt", {"toy-amalgam", "--k", "1", "--n", "1"});
}
