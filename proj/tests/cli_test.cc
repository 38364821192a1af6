// Copyright 2026 The msls Authors.
//
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


#include "msls/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "msls/io.h"

namespace msls {
namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult Cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  CliResult r;
  r.code = RunCli(args, out, err, in);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Gen(const std::string& kind, int n, const std::string& extra = "") {
  std::vector<std::string> args = {"gen", kind, "--n", std::to_string(n),
                                   "--seed", "7"};
  if (!extra.empty()) {
    args.push_back("--matroid");
    args.push_back(extra);
  }
  const CliResult r = Cli(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return r.out;
}

TEST(CliTest, GenWritesParsableInstance) {
  const std::string text = Gen("metric-random", 6);
  const Instance inst = ParseInstanceText(text);
  EXPECT_EQ(inst.n, 6);
  EXPECT_EQ(inst.metadata["generator"], "metric-random");
  EXPECT_EQ(text, Gen("metric-random", 6));
}

TEST(CliTest, AnalyzeReportsDiagnostics) {
  const CliResult r = Cli({"analyze", "-"}, Gen("metric-random", 7));
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(doc["command"], "analyze");
  EXPECT_EQ(doc["inputs_digest"].get<std::string>().size(), 16u);
  const Json& res = doc["results"];
  EXPECT_LE(res["gamma"]["gamma"].get<double>(), 1.0 + 1e-6);
  EXPECT_LE(res["metric"]["semi_metric"]["sigma"].get<double>(), 1.0 + 1e-9);
  EXPECT_TRUE(res["classification"]["supermodular"]["holds"].get<bool>());
  EXPECT_TRUE(res["lemmas"]["passed"].get<bool>());
  EXPECT_TRUE(res["declared_vs_measured"]["declared_sigma"]["within_declared"]
                  .get<bool>());
}

TEST(CliTest, AnalyzeCoverageAndJs) {
  const Json cov =
      Json::parse(Cli({"analyze"}, Gen("coverage-random", 7)).out)["results"];
  EXPECT_TRUE(cov["classification"]["submodular"]["holds"].get<bool>());
  EXPECT_TRUE(cov["gamma"]["vacuous"].get<bool>());
  EXPECT_EQ(cov["gamma"]["gamma"].get<double>(), 0.0);
  const Json js = Json::parse(Cli({"analyze"}, Gen("js-random", 7)).out)["results"];
  EXPECT_LE(js["metric"]["semi_metric"]["sigma"].get<double>(), 2.0 + 1e-6);
}

TEST(CliTest, SolveJsonAndCsv) {
  const std::string inst = Gen("metric-random", 10);
  const CliResult r = Cli({"solve", "--with-opt"}, inst);
  ASSERT_EQ(r.code, 0) << r.err;
  const Json res = Json::parse(r.out)["results"];
  const double ratio = res["opt"]["ratio"].get<double>();
  EXPECT_GE(ratio, 1.0 - 1e-12);
  EXPECT_LE(ratio, res["bounds"]["general_ratio"].get<double>());
  EXPECT_LE(ratio, res["bounds"]["supermodular_ratio"].get<double>());
  const CliResult csv = Cli({"solve", "--format", "csv"}, inst);
  ASSERT_EQ(csv.code, 0);
  std::istringstream lines(csv.out);
  std::string line;
  int rows = -1;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, res["local_search"]["iterations"].get<int>());
  EXPECT_EQ(csv.out.rfind("iteration,removed,inserted,value\n", 0), 0u);
}

TEST(CliTest, VerifySuites) {
  const CliResult r = Cli({"verify", "matching", "--count", "20", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["results"]["passed"].get<bool>());
  const CliResult m = Cli({"verify", "matroid", "--sizes", "5,6", "--count", "3"});
  EXPECT_EQ(m.code, 0) << m.err;
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Cli({}).code, kExitValidation);
  EXPECT_EQ(Cli({"bogus"}).code, kExitValidation);
  EXPECT_EQ(Cli({"gen", "metric-random", "--n", "5"}).code, kExitValidation);
  EXPECT_EQ(Cli({"gen", "metric-random", "--n", "1", "--seed", "1"}).code,
            kExitValidation);
  EXPECT_EQ(Cli({"analyze"}, "{not json").code, kExitValidation);
  EXPECT_EQ(Cli({"solve", "--epsilon", "0"}, Gen("metric-random", 5)).code,
            kExitValidation);
  EXPECT_EQ(Cli({"analyze", "--n-max", "6"}, Gen("metric-random", 8)).code,
            kExitGuard);
  EXPECT_EQ(Cli({"solve", "--with-opt"}, Gen("metric-random", 22)).code,
            kExitGuard);
  EXPECT_EQ(Cli({"verify", "lemmas", "--sizes", "30"}).code, kExitGuard);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
  // Checks whose hypotheses fail are skipped, not failed.
  EXPECT_EQ(Cli({"analyze"}, R"({"n": 2, "function": {"kind": "table",
      "values": [0, 1, 1, 0.5]}, "matroid": {"kind": "uniform", "r": 1}})")
                .code,
            kExitOk);
}

TEST(CliTest, OutFlagWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "msls_cli_test.json";
  const CliResult r = Cli({"solve", "--out", path.string()}, Gen("metric-random", 6));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(path);
  std::stringstream buf;
  buf << file.rdbuf();
  EXPECT_EQ(Json::parse(buf.str())["command"], "solve");
  std::filesystem::remove(path);
}

TEST(CliTest, ReportsAreReproducible) {
  const std::string inst = Gen("js-random", 8, "graphic");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "--seed", "4"},
           {"solve", "--with-opt", "--pivot", "best"},
           {"verify", "ratios", "--sizes", "7", "--count", "2"}}) {
    const CliResult a = Cli(args, inst);
    const CliResult b = Cli(args, inst);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace msls
