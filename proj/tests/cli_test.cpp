// Copyright 2026 The simplegames Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "commands.hpp"

namespace simplegames::cli {
namespace {

namespace fs = std::filesystem;

std::string sample(const std::string& name) { return std::string(SIMPLEGAMES_SAMPLES_DIR) + "/" + name; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("simplegames_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, DecomposeCoveringWithGivenCover) {
  DecomposeOptions opts;
  opts.input = sample("four_players.json");
  opts.cover = sample("four_players_cover.json");
  opts.output = path("dec.json");
  ASSERT_EQ(cmd_decompose(opts, out_, err_), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("part_count: 2"), std::string::npos);
  EXPECT_NE(out_.str().find("bound: |C| = 2"), std::string::npos);

  const auto file = parse_decomposition(read_file(*opts.output));
  EXPECT_EQ(file.method, Method::kCovering);
  std::vector<std::string> parts;
  for (const auto& p : file.decomposition.parts()) parts.push_back(p.to_string());
  std::sort(parts.begin(), parts.end());
  EXPECT_EQ(parts, (std::vector<std::string>{"[2;1,1,0,2]", "[2;1,1,2,0]"}));

  std::ostringstream vout, verr;
  EXPECT_EQ(cmd_verify(opts.input, *opts.output, vout, verr), kExitOk);
  EXPECT_EQ(vout.str(), "EQUIVALENT (16 coalitions checked)\n");
}

TEST_F(CliTest, DecomposeTaylorZwicker) {
  DecomposeOptions opts;
  opts.input = sample("seven_players.json");
  opts.method = Method::kTaylorZwicker;
  opts.output = path("tz.json");
  ASSERT_EQ(cmd_decompose(opts, out_, err_), kExitOk) << err_.str();
  const auto file = parse_decomposition(read_file(*opts.output));
  ASSERT_EQ(file.decomposition.size(), 2U);
  EXPECT_EQ(file.decomposition.parts()[0].to_string(), "[1;0,0,0,1,1,1,1]");
  EXPECT_EQ(file.decomposition.parts()[1].to_string(), "[1;1,1,0,0,0,0,1]");
  EXPECT_NE(out_.str().find("bound: |L^M| = 2"), std::string::npos);
}

TEST_F(CliTest, DecomposePairingAndFullCode) {
  DecomposeOptions opts;
  opts.input = sample("four_players.json");
  opts.method = Method::kPairing;
  opts.output = path("pair.json");
  ASSERT_EQ(cmd_decompose(opts, out_, err_), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("part_count: 2"), std::string::npos);
  EXPECT_NE(out_.str().find("(|L^M|+|C|)/2 = (4+0)/2 = 2"), std::string::npos);

  opts.method = Method::kCovering;
  opts.full_code = true;
  opts.output = path("full.json");
  std::ostringstream out;
  ASSERT_EQ(cmd_decompose(opts, out, err_), kExitOk) << err_.str();
  EXPECT_NE(out.str().find("bound: |C| = 4"), std::string::npos);
}

TEST_F(CliTest, DecomposeIsDeterministic) {
  DecomposeOptions opts;
  opts.input = sample("seven_players.json");
  opts.output = path("a.json");
  ASSERT_EQ(cmd_decompose(opts, out_, err_), kExitOk);
  opts.output = path("b.json");
  ASSERT_EQ(cmd_decompose(opts, out_, err_), kExitOk);
  EXPECT_EQ(read_file(path("a.json")), read_file(path("b.json")));
}

TEST_F(CliTest, DecomposeToStdoutKeepsJsonClean) {
  DecomposeOptions opts;
  opts.input = sample("four_players.json");
  ASSERT_EQ(cmd_decompose(opts, out_, err_), kExitOk);
  EXPECT_NO_THROW(parse_decomposition(out_.str()));
  EXPECT_NE(err_.str().find("part_count: 2"), std::string::npos);
}

TEST_F(CliTest, DecomposeBadInputs) {
  write_file(path("bad.json"), R"({"n": 3, "maximal_losing": [[1],[1,2]]})");
  DecomposeOptions opts;
  opts.input = path("bad.json");
  EXPECT_EQ(cmd_decompose(opts, out_, err_), kExitBadInput);
  EXPECT_NE(err_.str().find("AntichainViolation"), std::string::npos);

  opts.input = path("missing.json");
  EXPECT_EQ(cmd_decompose(opts, out_, err_), kExitBadInput);

  write_file(path("origin.json"), R"({"n": 4, "centers": [[]]})");
  opts.input = sample("four_players.json");
  opts.cover = path("origin.json");
  EXPECT_EQ(cmd_decompose(opts, out_, err_), kExitBadInput);
  EXPECT_NE(err_.str().find("NotACover"), std::string::npos);
}

TEST_F(CliTest, CoverFull) {
  CoverOptions opts;
  opts.full = 7;
  opts.output = path("c7.json");
  ASSERT_EQ(cmd_cover(opts, out_, err_), kExitOk);
  EXPECT_EQ(parse_code(read_file(*opts.output)).size(), 16U);
  EXPECT_NE(out_.str().find("centers: 16"), std::string::npos);
  EXPECT_NE(out_.str().find("kn_exact: 16"), std::string::npos);

  opts.full = 3;
  std::ostringstream out;
  ASSERT_EQ(cmd_cover(opts, out, err_), kExitOk);
  EXPECT_EQ(parse_code(read_file(*opts.output)).size(), 2U);
}

TEST_F(CliTest, CoverOfGame) {
  CoverOptions opts;
  opts.input = sample("four_players.json");
  opts.output = path("c.json");
  ASSERT_EQ(cmd_cover(opts, out_, err_), kExitOk);
  const Code code = parse_code(read_file(*opts.output));
  EXPECT_EQ(code.size(), 2U);
  EXPECT_TRUE(covering_radius_at_most(code, parse_game(read_file(*opts.input)).maximal_losing(), 1));
}

TEST_F(CliTest, CoverErrors) {
  CoverOptions none;
  EXPECT_EQ(cmd_cover(none, out_, err_), kExitBadInput);
  CoverOptions bad;
  bad.input = path("nope.json");
  EXPECT_EQ(cmd_cover(bad, out_, err_), kExitBadInput);
}

TEST_F(CliTest, Bounds) {
  ASSERT_EQ(cmd_bounds(12, out_, err_), kExitOk);
  const std::string row = out_.str();
  for (const char* want : {"table_lower=132", "table_upper=380", "sperner_minus_one=923"}) {
    EXPECT_NE(row.find(want), std::string::npos) << want << " in " << row;
  }

  std::ostringstream seven;
  ASSERT_EQ(cmd_bounds(7, seven, err_), kExitOk);
  EXPECT_NE(seven.str().find("kn_exact=16"), std::string::npos);
  EXPECT_NE(seven.str().find("sperner_minus_one=34"), std::string::npos);
  EXPECT_NE(seven.str().find("lower_formula=C(7,3)/7=5"), std::string::npos);

  std::ostringstream four;
  ASSERT_EQ(cmd_bounds(4, four, err_), kExitOk);
  EXPECT_NE(four.str().find("kn_exact=4"), std::string::npos);
  EXPECT_EQ(four.str().find("table_"), std::string::npos);

  EXPECT_EQ(cmd_bounds(0, out_, err_), kExitBadInput);
  EXPECT_EQ(cmd_bounds(64, out_, err_), kExitBadInput);
}

TEST_F(CliTest, VerifyMismatchAndDimension) {
  EXPECT_EQ(cmd_verify(sample("four_players.json"), sample("four_players_single_part.json"), out_, err_),
            kExitMismatch);
  EXPECT_NE(out_.str().find("MISMATCH at {3}"), std::string::npos);

  write_file(path("three.json"),
             R"({"n": 3, "method": "covering", "parts": [{"quota": 1, "weights": [1,1,1]}], "part_count": 1})");
  EXPECT_EQ(cmd_verify(sample("four_players.json"), path("three.json"), out_, err_), kExitBadInput);
}

TEST_F(CliTest, GenerateIsSeeded) {
  ASSERT_EQ(cmd_generate(9, 42, path("a.json"), out_, err_), kExitOk);
  ASSERT_EQ(cmd_generate(9, 42, path("b.json"), out_, err_), kExitOk);
  EXPECT_EQ(read_file(path("a.json")), read_file(path("b.json")));
  EXPECT_NO_THROW(parse_game(read_file(path("a.json"))));
  EXPECT_EQ(cmd_generate(0, 1, std::nullopt, out_, err_), kExitBadInput);
}

}  // namespace
}  // namespace simplegames::cli
