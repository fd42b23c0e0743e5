/*
 * Copyright 2026 The qrl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qrl/analysis.hpp"

namespace qrl::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("qrl_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const auto p = path_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

TEST(CliSeqGen, MinExtraSuperBothMethods) {
  const std::string expected = "1\n2\n5\n13\n34\n89\n233\n610\n";
  EXPECT_EQ(run_cli({"seq", "gen", "--kind", "min-extra-super", "--n", "7"}).out, expected);
  EXPECT_EQ(run_cli({"seq", "gen", "--kind", "min-extra-super", "--n", "7", "--method", "def"}).out, expected);
}

TEST(CliSeqGen, MinSuper) {
  const Result r = run_cli({"seq", "gen", "--kind", "min-super", "--n", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1\n2\n4\n8\n");
}

TEST(CliSeqGen, BadKindIsUsageError) {
  EXPECT_EQ(run_cli({"seq", "gen", "--kind", "fib", "--n", "3"}).code, kExitError);
}

TEST(CliSeqCheck, ValidInvalidAndErrors) {
  TempDir dir;
  const auto good = dir.file("good.txt", "# Def 2 example\n1\n3\n8\n21\n54\n139\n367\n960\n");
  const auto bad = dir.file("bad.txt", "1\n3\n8\n21\n54\n139\n367\n956\n");
  const auto junk = dir.file("junk.txt", "1\n2\nx\n");

  Result r = run_cli({"seq", "check", "--kind", "extra-super", "--file", good});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "valid\n");

  r = run_cli({"seq", "check", "--kind", "extra-super", "--file", bad});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_EQ(r.out, "invalid at index 7: sum_inequality_failed\n");

  r = run_cli({"seq", "check", "--kind", "super", "--file", bad});
  EXPECT_EQ(r.code, kExitOk);

  r = run_cli({"seq", "check", "--kind", "super", "--file", junk});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);

  EXPECT_EQ(run_cli({"seq", "check", "--kind", "super", "--file", dir.file("missing.txt")}).code, kExitError);
  EXPECT_EQ(run_cli({"seq", "check", "--kind", "super", "--file", dir.file("empty.txt", "# none\n")}).code,
            kExitError);
}

TEST(CliSqrt5, SeriesExactAndTruncated) {
  EXPECT_EQ(run_cli({"sqrt5", "--method", "series", "--n", "10"}).out,
            "2.2360679743651417084038257598876953125\n");
  EXPECT_EQ(run_cli({"sqrt5", "--method", "series", "--n", "4", "--digits", "5"}).out, "2.23602\n");
}

TEST(CliSqrt5, Ratio) {
  EXPECT_EQ(run_cli({"sqrt5", "--method", "ratio", "--n", "8", "--digits", "16"}).out, "2.2360655737704918\n");
  EXPECT_EQ(run_cli({"sqrt5", "--method", "ratio", "--n", "8"}).out, "682/305\n");
}

TEST(CliSqrt5, MissingArgumentsAndCap) {
  EXPECT_EQ(run_cli({"sqrt5", "--method", "ratio"}).code, kExitError);
  ::setenv("QRL_DIGIT_CAP", "10", 1);
  const Result r = run_cli({"sqrt5", "--method", "ratio", "--n", "8", "--digits", "16"});
  ::unsetenv("QRL_DIGIT_CAP");
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
}

TEST(CliSqrt5, FindN) {
  EXPECT_EQ(run_cli({"sqrt5", "find-n", "--method", "ratio", "--digits", "5"}).out, "8\n");
  EXPECT_EQ(run_cli({"sqrt5", "find-n", "--method", "ratio", "--digits", "8"}).out, "11\n");
  EXPECT_EQ(run_cli({"sqrt5", "find-n", "--method", "series", "--digits", "8"}).out, "10\n");
  EXPECT_EQ(run_cli({"sqrt5", "find-n", "--method", "series", "--digits", "0"}).code, kExitError);
}

TEST(CliPhi, ValueAndConjugate) {
  EXPECT_EQ(run_cli({"phi", "--method", "cf", "--n", "180", "--digits", "36"}).out,
            "1.618033988749894848204586834365638117\n");
  EXPECT_EQ(run_cli({"phi", "--method", "series", "--n", "65", "--digits", "36"}).out,
            "1.618033988749894848204586834365638117\n");
  EXPECT_EQ(run_cli({"phi", "conj", "--method", "cf", "--n", "180", "--digits", "36"}).out,
            "0.618033988749894848204586834365638117\n");
  EXPECT_EQ(run_cli({"phi", "--method", "cf", "--n", "3"}).code, kExitError);
}

TEST(CliPhiMatch, PrintsBothCriteriaAndClaim) {
  const Result r = run_cli({"phi-match", "--digits", "36"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "digits 36\nstrict_error_n 44\nprefix_n 45\npaper_claim 40\n");
}

TEST(CliCompare, StdoutAndFileAgree) {
  TempDir dir;
  const auto path = dir.file("report.json");
  const std::vector<std::string> base{"compare", "--n-max", "12", "--ref-digits", "40", "--targets", "5,8",
                                      "--format", "json"};
  const Result to_stdout = run_cli(base);
  ASSERT_EQ(to_stdout.code, kExitOk) << to_stdout.err;
  auto with_out = base;
  with_out.insert(with_out.end(), {"--out", path});
  ASSERT_EQ(run_cli(with_out).code, kExitOk);
  std::ifstream in(path, std::ios::binary);
  const std::string file_text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(file_text, to_stdout.out);
  const ComparisonReport report = parse_report_json(file_text);
  EXPECT_EQ(report.first_n_to_reach.at(5), (FirstN{5, 8}));
}

TEST(CliCompare, CsvHeaderAndBadInputs) {
  const Result r = run_cli({"compare", "--n-max", "3", "--ref-digits", "20", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), std::string(kCsvHeader));
  EXPECT_EQ(run_cli({"compare", "--n-max", "3", "--ref-digits", "12", "--targets", "5", "--format", "csv"}).code,
            kExitError);
  EXPECT_EQ(run_cli({"compare", "--n-max", "3", "--ref-digits", "20", "--format", "xml"}).code, kExitError);
}

TEST(CliTopLevel, HelpAndUnknown) {
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
  EXPECT_EQ(run_cli({}).code, kExitError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitError);
}

}  // namespace
}  // namespace qrl::cli
