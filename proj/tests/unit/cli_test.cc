// Copyright 2026 The csgraph Authors
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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "csg/dataset.h"
#include "synthetic.h"

namespace csg {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("csg_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_ / "data");
    SaveDataset(dir_ / "data", testing::PlantedPartition({.n = 200, .seed = 3}));
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  // Runs the tool with stdout captured to a file; returns the exit status.
  static int Run(const std::string& args, std::string* out = nullptr) {
    const fs::path log = dir_ / "stdout.txt";
    const std::string cmd = std::string("\"") + CSG_CLI_PATH + "\" " + args + " > \"" +
                            log.string() + "\" 2> \"" + (dir_ / "stderr.txt").string() + "\"";
    const int status = std::system(cmd.c_str());
    if (out != nullptr) {
      std::ifstream in(log);
      std::stringstream ss;
      ss << in.rdbuf();
      *out = ss.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string Data() { return "--data \"" + (dir_ / "data").string() + "\""; }
  static std::string Path(const char* name) { return "\"" + (dir_ / name).string() + "\""; }

  static fs::path dir_;
};

fs::path CliTest::dir_;

TEST_F(CliTest, SplitTrainCorrectSmoothEval) {
  ASSERT_EQ(Run("split " + Data() + " --seed 4 --out " + Path("split.txt")), 0);
  const std::string split = "--split " + Path("split.txt");
  ASSERT_EQ(Run("train " + Data() + " " + split + " --epochs 40 --out " + Path("z.csv")), 0);
  ASSERT_EQ(Run("cas " + Data() + " " + split + " --predictions " + Path("z.csv") +
                " --variant fdiff --tune --report " + Path("report.json") + " --per-node " +
                Path("nodes.csv")),
            0);
  EXPECT_TRUE(fs::exists(dir_ / "report.json"));
  std::string out;
  ASSERT_EQ(Run("eval " + Data() + " " + split + " --predictions " + Path("nodes.csv"), &out), 0);
  EXPECT_NE(out.find("final_pred accuracy on test"), std::string::npos) << out;
  ASSERT_EQ(Run("eval " + Data() + " " + split + " --predictions " + Path("z.csv"), &out), 0);
}

TEST_F(CliTest, LabelPropagationRunNeedsNoTraining) {
  ASSERT_EQ(Run("split " + Data() + " --seed 1 --out " + Path("split_lp.txt")), 0);
  EXPECT_EQ(Run("run " + Data() + " --split " + Path("split_lp.txt") + " --mode lp-only"), 0);
}

TEST_F(CliTest, InvalidInputsExitWithTwo) {
  EXPECT_EQ(Run(""), 2);
  EXPECT_EQ(Run("split --data \"" + (dir_ / "missing").string() + "\""), 2);
  ASSERT_EQ(Run("split " + Data() + " --seed 2 --out " + Path("split_bad.txt")), 0);
  EXPECT_EQ(Run("run " + Data() + " --split " + Path("split_bad.txt") +
                " --mode lp-only --alpha-smooth 1.5"),
            2);
  EXPECT_EQ(Run("run " + Data() + " --split " + Path("split_bad.txt") + " --mode nonsense"), 2);
}

TEST_F(CliTest, IterationCapExitsWithThreeWhenConvergenceRequired) {
  ASSERT_EQ(Run("split " + Data() + " --seed 5 --out " + Path("split_cap.txt")), 0);
  const std::string base =
      "run " + Data() + " --split " + Path("split_cap.txt") + " --mode lp-only --max-iters 2";
  EXPECT_EQ(Run(base), 0);
  EXPECT_EQ(Run(base + " --require-convergence"), 3);
}

TEST_F(CliTest, VersionFlag) {
  std::string out;
  EXPECT_EQ(Run("--version", &out), 0);
  EXPECT_FALSE(out.empty());
}

}  // namespace
}  // namespace csg
