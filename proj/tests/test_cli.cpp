// Copyright 2026 The copsearch Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

namespace copsearch::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("copsearch_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    Write("c3.edges", "n 3\n0 1\n1 2\n2 0\n");
    Write("single.edges", "n 1\n");
    Write("chain.edges", "# chain\n0 1\n1 2\n");
    Write("loop.edges", "n 2\n0 1\n1 1\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name, std::ios::binary) << text;
    return Path(name);
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, CopNumber) {
  const CliRun r = Call({"copnum", "--variant", "visible", Path("c3.edges")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "2\n");
  EXPECT_EQ(Call({"copnum", "--variant", "inert", Path("chain.edges")}).out, "1\n");
}

TEST_F(CliTest, SolveVerdicts) {
  const CliRun robber =
      Call({"solve", "--variant", "inert", "--cops", "0", Path("single.edges")});
  EXPECT_EQ(robber.code, kOk);
  EXPECT_EQ(robber.out, "ROBBER\n");
  EXPECT_EQ(Call({"solve", "--cops", "2", "--monotone", Path("c3.edges")}).out,
            "COPS\n");
}

TEST_F(CliTest, EmitCertThenCertify) {
  for (const std::string variant : {"visible", "inert", "invisible-fast"}) {
    const std::string cert = Path(variant + ".json");
    const CliRun s = Call({"solve", "--variant", variant, "--cops", "2",
                        "--emit-cert", cert, Path("c3.edges")});
    ASSERT_EQ(s.code, kOk) << s.err;
    const CliRun v = Call({"certify", Path("c3.edges"), cert});
    EXPECT_EQ(v.code, kOk) << v.err;
    EXPECT_EQ(v.out, "VALID\n");
  }
}

TEST_F(CliTest, CertifyFailures) {
  const std::string cert = Path("cert.json");
  ASSERT_EQ(Call({"solve", "--cops", "2", "--emit-cert", cert, Path("c3.edges")}).code,
            kOk);
  // Same size graph, different arcs: fingerprint mismatch.
  const CliRun wrong = Call({"certify", Path("chain.edges"), cert});
  EXPECT_EQ(wrong.code, kCertificateInvalid);
  EXPECT_EQ(Call({"certify", Path("c3.edges"), Write("bad.json", "{}")}).code,
            kCertificateInvalid);

  const std::string seq = Path("seq.json");
  ASSERT_EQ(Call({"solve", "--variant", "inert", "--cops", "1", "--emit-cert", seq,
                  Path("single.edges")})
                .code,
            kOk);
  std::string text = Slurp(seq);
  const auto at = text.find("\"body\"");
  ASSERT_NE(at, std::string::npos);
  text = text.substr(0, at) + "\"body\": []\n}\n";
  const CliRun dropped = Call({"certify", Path("single.edges"), Write("seq2.json", text)});
  EXPECT_EQ(dropped.code, kCertificateInvalid);
  EXPECT_EQ(dropped.out, "INVALID\n");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Call({}).code, kUsage);
  EXPECT_EQ(Call({"frobnicate"}).code, kUsage);
  EXPECT_EQ(Call({"copnum", "--variant", "lazy", Path("c3.edges")}).code, kUsage);
  EXPECT_EQ(Call({"copnum", Path("missing.edges")}).code, kParse);
  const CliRun loop = Call({"copnum", Path("loop.edges")});
  EXPECT_EQ(loop.code, kParse);
  EXPECT_NE(loop.err.find("3"), std::string::npos) << loop.err;
  EXPECT_EQ(Call({"solve", "--cops", "5", Path("c3.edges")}).code, kUsage);
  EXPECT_EQ(Call({"solve", "--cops", "2", "--budget", "3", Path("c3.edges")}).code,
            kBudget);
  EXPECT_EQ(Call({"family", "--k", "0"}).code, kUsage);
}

TEST_F(CliTest, Version) {
  const CliRun r = Call({"--version"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_FALSE(r.out.empty());
}

TEST_F(CliTest, WidthAndGap) {
  EXPECT_EQ(Call({"width", "--measure", "dpw", Path("c3.edges")}).out, "1\n");
  EXPECT_EQ(Call({"width", "--measure", "dagwidth", Path("chain.edges")}).out, "1\n");
  const CliRun g = Call({"gap", "--variant", "visible", Path("c3.edges")});
  EXPECT_EQ(g.code, kOk);
  EXPECT_NE(g.out.find("2"), std::string::npos);
}

TEST_F(CliTest, HardProblems) {
  EXPECT_EQ(Call({"hard", "fas", Path("c3.edges")}).code, kOk);
  const CliRun report = Call({"hard", "report", Path("c3.edges"), Path("chain.edges")});
  EXPECT_EQ(report.code, kOk);
  EXPECT_EQ(report.out.substr(0, report.out.find('\n')),
            "instance,n,m,hamiltonian,fvs,fas,mes,dagwidth,kellywidth,status");
}

TEST_F(CliTest, GapScanIsDeterministic) {
  const std::vector<std::string> args = {"gapscan", "--n", "5", "--random", "10",
                                         "--seed", "3", "--format", "jsonl"};
  const CliRun a = Call(args);
  const CliRun b = Call(args);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"summary\""), std::string::npos);
  const CliRun csv = Call({"gapscan", "--n", "3", "--exhaustive"});
  EXPECT_EQ(csv.code, kOk) << csv.err;
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 65);
}

}  // namespace
}  // namespace copsearch::cli
