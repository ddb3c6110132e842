#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cpg_cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cpg_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cpg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

const fs::path kGolden = CPG_GOLDEN_DIR;
const fs::path kData = CPG_TEST_DATA_DIR;

}  // namespace

TEST(Cli, GoldenOutputs) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"analyze", "Z:30", "--format", "dot"}, "z30.dot"},
      {{"analyze", "A4", "--format", "dot"}, "a4.dot"},
      {{"analyze", "S3", "--format", "json"}, "s3.json"},
      {{"analyze", "Z:30", "--format", "table"}, "z30.txt"},
      {{"export", "Q8", "--format", "json"}, "q8_graph.json"},
      {{"embed", (kData / "k32.txt").string()}, "k32_embedding.json"},
  };
  for (const auto& [args, file] : cases) {
    const auto r = cpg_run(args);
    EXPECT_EQ(r.code, 0) << file << ": " << r.err;
    EXPECT_EQ(r.out, slurp(kGolden / file)) << file;
  }
}

TEST(Cli, RepeatRunsAreByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "S4", "--format", "json"}, {"export", "Z:210"}, {"verify", "--jobs", "3"}}) {
    EXPECT_EQ(cpg_run(args).out, cpg_run(args).out);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cpg_run({"analyze", "Z:7"}).code, 3);
  EXPECT_EQ(cpg_run({"analyze", "Z:1"}).code, 3);
  EXPECT_EQ(cpg_run({"analyze", "Q:8"}).code, 2);
  EXPECT_EQ(cpg_run({"analyze", "G1:3,5"}).code, 2);
  EXPECT_EQ(cpg_run({"analyze", "Z:30", "--format", "yaml"}).code, 2);
  EXPECT_EQ(cpg_run({"frobnicate"}).code, 2);
  EXPECT_EQ(cpg_run({"analyze", "Z:4096"}).code, 4);
  EXPECT_EQ(cpg_run({"analyze", "Z:210", "--max-order", "100"}).code, 4);
  EXPECT_EQ(cpg_run({"analyze", "S4", "--exact-cap", "10"}).code, 4);
  EXPECT_EQ(cpg_run({"embed", (kData / "missing.txt").string()}).code, 2);
  EXPECT_EQ(cpg_run({"--help"}).code, 0);
}

TEST(Cli, Undefined) {
  const auto r = cpg_run({"analyze", "Z:13"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("undefined"), std::string::npos);
}

TEST(Cli, EmptyCatalogWarns) {
  const auto r = cpg_run({"verify", (kData / "empty.jsonl").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("0 entries"), std::string::npos);
}

TEST(Cli, WrongExpectationNamesRow) {
  const auto r = cpg_run({"verify", (kData / "wrong.jsonl").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("FAIL Z:30 omega"), std::string::npos);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["failed"], 1);
  EXPECT_FALSE(j["ok"].get<bool>());
}

TEST(Cli, UnknownCheckIsAnError) {
  const auto r = cpg_run({"verify", (kData / "unknown_check.jsonl").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("no_such_check"), std::string::npos);
}

TEST(Cli, DefaultVerifyPasses) {
  const auto r = cpg_run({"verify", "--format", "table", "--degree-max", "200", "--embed-trials", "10"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0 failed"), std::string::npos) << r.out;
}

TEST(Cli, DihedralExport) {
  const auto r = cpg_run({"export", "D:6", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["vertices"].size(), 14u);
  EXPECT_EQ(j["edges"].size(), 10u);
  const auto z = nlohmann::json::parse(cpg_run({"analyze", "Z:210", "--format", "json"}).out);
  EXPECT_EQ(z["analysis"]["n_vertices"], 14);
  EXPECT_FALSE(z["analysis"]["planarity"]["planar"].get<bool>());
}

TEST(Cli, WritesOutFile) {
  const fs::path tmp = fs::temp_directory_path() / "cpg_cli_test_out.dot";
  fs::remove(tmp);
  const auto r = cpg_run({"export", "Z:12", "--out", tmp.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(tmp), cpg_run({"export", "Z:12"}).out);
  fs::remove(tmp);
}

TEST(Cli, CatalogListing) {
  const auto r = cpg_run({"catalog", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GE(j["groups"].size(), 19u);
  EXPECT_GE(j["checks"].size(), 30u);
}
