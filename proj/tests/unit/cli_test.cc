// Copyright 2026 The Corn Authors.
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "corn/casting/prompt.h"
#include "corn/common/error.h"
#include "corn/curation/dataset.h"
#include "corn/curation/rnli.h"
#include "corn/eval/gold.h"
#include "corn/text/tokenizer.h"
#include "corn/cli.h"
#include "corn/io.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "oracles/test_data.h"

namespace corn::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using testing::DataPath;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Corn(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("corn_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string Slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  std::vector<std::string> CurateArgs(const std::string& out, int seed) const {
    return {"curate", "--corpus", DataPath("curation/corpus.jsonl"), "--positive",
            DataPath("curation/positive.txt"), "--negative", DataPath("curation/negative.txt"),
            "--seeds", DataPath("curation/seeds.json"), "--out", out, "--seed",
            std::to_string(seed), "--per-label-target", "300"};
  }

  fs::path dir_;
};

TEST_F(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(Corn({"--help"}).code, kExitOk);
  EXPECT_EQ(Corn({"--version"}).code, kExitOk);
  EXPECT_EQ(Corn({"nonsense"}).code, kExitBadInput);
  EXPECT_EQ(Corn({"predict", "--task", "xyz", "--backend", "stub", "--input", "x"}).code,
            kExitBadInput);
}

TEST_F(CliTest, ExitCodeMapping) {
  EXPECT_EQ(ExitCodeFor(ErrorCode::kIoError), kExitBadInput);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kMalformedGold), kExitBadInput);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kIdMismatch), kExitBadInput);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kNoViableCategory), kExitNoViable);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kBackendUnavailable), kExitBackendDown);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kMalformedResponse), kExitBackendDown);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kNonFinite), kExitFailure);
}

TEST_F(CliTest, CurateIsBalancedAndReproducible) {
  const CliRun a = Corn(CurateArgs(Path("a"), 7));
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const CliRun b = Corn(CurateArgs(Path("b"), 7));
  ASSERT_EQ(b.code, kExitOk) << b.err;
  for (const char* name : {"rnli.train.jsonl", "rnli.valid.jsonl", "rnli.holdout.jsonl"}) {
    EXPECT_EQ(Slurp(fs::path(Path("a")) / name), Slurp(fs::path(Path("b")) / name)) << name;
  }
  std::map<std::string, int> counts;
  for (const char* name : {"rnli.train.jsonl", "rnli.valid.jsonl", "rnli.holdout.jsonl"}) {
    for (const auto& ex : curation::LoadRnliExamples(fs::path(Path("a")) / name)) {
      ++counts[std::string(ToString(ex.label))];
    }
  }
  EXPECT_EQ(counts["entailment"], 300);
  EXPECT_EQ(counts["neutral"], 300);
  EXPECT_EQ(counts["contradiction"], 300);
}

TEST_F(CliTest, CurateMissingLexiconNamesPath) {
  auto args = CurateArgs(Path("a"), 7);
  args[4] = "/nonexistent/positive.txt";
  const CliRun r = Corn(args);
  EXPECT_EQ(r.code, kExitBadInput);
  EXPECT_NE(r.err.find("/nonexistent/positive.txt"), std::string::npos);
}

TEST_F(CliTest, CurateWithoutSeedsHasNoViableCategory) {
  // No seeds and an empty lexicon leave propagation nothing to start from.
  std::ofstream(Path("seeds.json")) << "{}";
  std::ofstream(Path("empty.txt")) << "; no words\n";
  auto args = CurateArgs(Path("a"), 7);
  args[4] = Path("empty.txt");
  args[6] = Path("empty.txt");
  args[8] = Path("seeds.json");
  EXPECT_EQ(Corn(args).code, kExitNoViable);
}

TEST_F(CliTest, OracleRoundTripScoresPerfectly) {
  const std::string gold = DataPath("eval/gold50.jsonl");
  for (const std::string task : {"ae", "asc", "e2e"}) {
    const std::string pred = Path(task + ".jsonl");
    const CliRun p = Corn({"predict", "--task", task, "--backend", "oracle:" + gold,
                        "--oracle-strict", "--input", gold, "--out", pred, "--workers", "4"});
    ASSERT_EQ(p.code, kExitOk) << p.err;
    const std::string report = Path(task + ".report.json");
    const CliRun e = Corn({"eval", "--task", task, "--pred", pred, "--gold", gold, "--out", report});
    ASSERT_EQ(e.code, kExitOk) << e.err;
    const json j = json::parse(Slurp(report));
    EXPECT_EQ(j["macro_f1"].get<double>(), 1.0) << task;
    if (j.contains("accuracy")) {
      EXPECT_EQ(j["accuracy"].get<double>(), 1.0) << task;
    }
  }
}

TEST_F(CliTest, PredictionsAreIdenticalAcrossWorkerCounts) {
  const std::string gold = DataPath("eval/gold50.jsonl");
  for (const std::string workers : {"1", "3"}) {
    ASSERT_EQ(Corn({"predict", "--task", "e2e", "--backend", "stub", "--input", gold, "--out",
                    Path("w" + workers), "--workers", workers})
                  .code,
              kExitOk);
  }
  EXPECT_EQ(Slurp(Path("w1")), Slurp(Path("w3")));
}

TEST_F(CliTest, TwoStepTraceThroughCli) {
  // Gold has only "Windows 8"; the oracle also accepts "demonstration".
  const std::vector<std::string> tokens = {"I", "was", "given", "a", "demonstration",
                                           "of", "Windows", "8", "."};
  const std::string raw = "I was given a demonstration of Windows 8 .";
  const std::vector<eval::GoldSentence> gold = {
      eval::MakeGoldSentence("g01", raw, tokens, {{6, 8, Polarity::kNeu, "Windows 8"}})};
  const std::vector<eval::GoldSentence> oracle = {eval::MakeGoldSentence(
      "g01", raw, tokens,
      {{4, 5, Polarity::kNeu, "demonstration"}, {6, 8, Polarity::kNeu, "Windows 8"}})};
  eval::WriteGold(Path("gold.jsonl"), gold);
  eval::WriteGold(Path("oracle.jsonl"), oracle);
  ASSERT_EQ(Corn({"predict", "--task", "e2e", "--backend", "oracle:" + Path("oracle.jsonl"),
                  "--input", Path("gold.jsonl"), "--out", Path("pred.jsonl")})
                .code,
            kExitOk);
  const auto records = LoadPredictions(Path("pred.jsonl"));
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].labels, (std::vector<std::string>{"O", "O", "O", "O", "T-NEU", "O",
                                                         "T-NEU", "T-NEU", "O"}));
  const CliRun e = Corn({"eval", "--task", "e2e", "--pred", Path("pred.jsonl"), "--gold",
                      Path("gold.jsonl"), "--format", "json"});
  ASSERT_EQ(e.code, kExitOk) << e.err;
  EXPECT_NEAR(json::parse(e.out)["macro_f1"].get<double>(), 0.4308, 5e-4);
}

TEST_F(CliTest, EvalRejectsMissingIds) {
  const std::string gold = DataPath("eval/gold50.jsonl");
  ASSERT_EQ(Corn({"predict", "--task", "ae", "--backend", "oracle:" + gold, "--input", gold,
                  "--out", Path("pred.jsonl")})
                .code,
            kExitOk);
  std::ifstream in(Path("pred.jsonl"));
  std::ofstream out(Path("short.jsonl"));
  std::string line;
  std::getline(in, line);  // drop the first record
  while (std::getline(in, line)) out << line << "\n";
  out.close();
  const CliRun r = Corn({"eval", "--task", "ae", "--pred", Path("short.jsonl"), "--gold", gold});
  EXPECT_EQ(r.code, kExitBadInput);
  EXPECT_NE(r.err.find("g00"), std::string::npos);
}

TEST_F(CliTest, RuleBackendAsc) {
  const CliRun r = Corn({"predict", "--task", "asc", "--backend", "rule", "--positive",
                         DataPath("curation/positive.txt"), "--negative",
                      DataPath("curation/negative.txt"), "--input",
                      DataPath("eval/gold50.jsonl")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  size_t n = 0;
  while (std::getline(lines, line)) {
    const auto rec = ParsePrediction(line);
    EXPECT_EQ(rec.task, "asc");
    EXPECT_EQ(rec.labels.size(), rec.spans.size());
    ++n;
  }
  EXPECT_EQ(n, 50u);  // sentences without aspects give empty records
  EXPECT_EQ(Corn({"predict", "--task", "asc", "--backend", "rule", "--input",
                  DataPath("eval/gold50.jsonl")})
                .code,
            kExitBadInput);
  std::ofstream(Path("plain.txt")) << "The screen is great .\n";
  EXPECT_EQ(Corn({"predict", "--task", "asc", "--backend", "stub", "--input", Path("plain.txt")})
                .code,
            kExitBadInput);
}

TEST_F(CliTest, PlainTextInput) {
  std::ofstream(Path("in.txt")) << "The screen is great .\nService was slow .\n";
  const CliRun r = Corn({"predict", "--task", "ae", "--backend", "stub", "--input", Path("in.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find(R"("sentence_id":"2")"), std::string::npos);
}

TEST_F(CliTest, UnreachableHttpBackend) {
  setenv("CORN_HTTP_TIMEOUT_MS", "500", 1);
  const CliRun r = Corn({"predict", "--task", "ae", "--backend", "http:127.0.0.1:1", "--input",
                      DataPath("eval/gold50.jsonl")});
  unsetenv("CORN_HTTP_TIMEOUT_MS");
  EXPECT_EQ(r.code, kExitBackendDown);
}

TEST_F(CliTest, ConvertWritesGoldAndReport) {
  const CliRun r = Corn({"convert", "--input", DataPath("semeval/restaurants_2014.xml"), "--out",
                      Path("gold.jsonl"), "--report", Path("report.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(eval::LoadGold(Path("gold.jsonl")).size(), 10u);
  const json report = json::parse(Slurp(Path("report.json")));
  EXPECT_EQ(report["aspects"], 11);
  EXPECT_EQ(report["conflict_dropped"], 1);
  EXPECT_EQ(Corn({"convert", "--input", Path("missing.xml"), "--out", Path("x")}).code,
            kExitBadInput);
}

TEST_F(CliTest, SclCheck) {
  const CliRun r = Corn({"scl-check"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("gradient_vs_finite_differences"), std::string::npos);
}

}  // namespace
}  // namespace corn::cli
