#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli/commands.h"
#include "json.hpp"
#include "mrperf/job_spec.h"
#include "support/approx.h"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;
using namespace mrperf;

namespace {

const fs::path kSamples = MRPERF_SAMPLES_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun mrperf_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mrperf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mrperf_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    write_text_file(p, text);
    return p.string();
  }

  // Reference job spec with one hadoop field replaced.
  std::string spec_with(const std::string& field, const Json& value) {
    Json doc = Json::parse(read_text_file(kSamples / "reference_job.json"));
    doc["hadoop"][field] = value;
    return write("spec.json", doc.dump());
  }

  fs::path dir_;
};

std::string sample(const char* name) { return (kSamples / name).string(); }

}  // namespace

TEST_F(CliTest, EstimateTableShowsReferenceJobFigures) {
  const CliRun r = mrperf_cli({"estimate", "--spec", sample("reference_job.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("numSpills                               2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("numShuffleFiles                         6"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Cost_Job"), std::string::npos);
  EXPECT_NE(r.out.find("units: cost units"), std::string::npos);
  EXPECT_NE(r.out.find("6 significant digits"), std::string::npos);
}

TEST_F(CliTest, MapOnlyReportOmitsReduceAndNetwork) {
  const CliRun r = mrperf_cli({"estimate", "--spec", sample("map_only.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("Reduce task"), std::string::npos);
  EXPECT_EQ(r.out.find("Network"), std::string::npos);
  const CliRun m = mrperf_cli({"estimate", "--spec", sample("map_only.json"), "--format", "machine"});
  const Json doc = Json::parse(m.out);
  EXPECT_FALSE(doc["results"].contains("reduceTask"));
  EXPECT_FALSE(doc["results"].contains("network"));
}

TEST_F(CliTest, MachineOutputRoundTrips) {
  const std::string out_path = (dir_ / "report.json").string();
  const CliRun r = mrperf_cli({"estimate", "--spec", sample("reference_job.json"), "--format",
                            "machine", "--out", out_path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_text_file(out_path), r.out);

  // The report is itself a valid job spec that reproduces the same estimate.
  const CliRun again = mrperf_cli({"estimate", "--spec", out_path, "--format", "machine"});
  ASSERT_EQ(again.code, 0) << again.err;
  Json a = Json::parse(r.out), b = Json::parse(again.out);
  EXPECT_EQ(a["hadoop"], b["hadoop"]);
  EXPECT_EQ(a["profile"], b["profile"]);
  EXPECT_EQ(a["costs"], b["costs"]);

  const auto& job_a = a["results"]["job"];
  const auto& job_b = b["results"]["job"];
  for (auto it = job_a.begin(); it != job_a.end(); ++it) {
    const double x = it->get<double>();
    const double y = job_b[it.key()].get<double>();
    EXPECT_REL(x, y, 1e-12) << it.key();
  }
  EXPECT_REL(a["results"]["network"]["netTransferSize"].get<double>(), 24159191040.0, 1e-12);
  EXPECT_EQ(a["results"]["mapTask"]["spill"]["numSpills"], 2);
  EXPECT_EQ(a["results"]["reduceTask"]["shuffle"]["numShuffleFiles"], 6);
  EXPECT_EQ(a["metadata"]["method"], "analytic");
  EXPECT_EQ(a["units"], "cost units");
}

TEST_F(CliTest, DeclaredUnitsAreEchoed) {
  Json doc = Json::parse(read_text_file(kSamples / "reference_job.json"));
  doc["units"] = "milliseconds";
  const CliRun r = mrperf_cli({"estimate", "--spec", write("s.json", doc.dump())});
  EXPECT_NE(r.out.find("units: milliseconds"), std::string::npos);
}

TEST_F(CliTest, SimulateWritesTimeline) {
  const std::string tl = (dir_ / "timeline.csv").string();
  const CliRun r = mrperf_cli({"simulate", "--spec", sample("reference_job.json"), "--timeline", tl});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = read_text_file(tl);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 441);
  EXPECT_NE(r.out.find("makespanCost"), std::string::npos);
  const CliRun m = mrperf_cli({"estimate", "--method", "simulated", "--spec",
                            sample("reference_job.json"), "--format", "machine"});
  EXPECT_EQ(Json::parse(m.out)["results"]["method"], "simulated");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(mrperf_cli({"estimate", "--spec", (dir_ / "missing.json").string()}).code, 2);
  const CliRun bad = mrperf_cli({"estimate", "--spec", spec_with("pSpillPerc", 2.0)});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("pSpillPerc"), std::string::npos);
  EXPECT_EQ(mrperf_cli({"estimate", "--spec", write("m.json", "{\"hadoop\": ")}).code, 1);
  EXPECT_EQ(mrperf_cli({"estimate", "--spec", spec_with("pBogus", 1)}).code, 1);
  EXPECT_EQ(mrperf_cli({"estimate", "--spec", sample("reference_job.json"), "--out",
                        (dir_ / "no" / "such" / "dir.txt").string()})
                .code,
            2);
  EXPECT_EQ(mrperf_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(mrperf_cli({"estimate"}).code, 1);
  EXPECT_EQ(mrperf_cli({"estimate", "--spec", sample("reference_job.json"), "--format", "xml"}).code,
            1);
  EXPECT_EQ(mrperf_cli({"--help"}).code, 0);
}

TEST_F(CliTest, WhatIfRows) {
  const std::string csv = (dir_ / "w.csv").string();
  const CliRun r = mrperf_cli({"whatif", "--spec", sample("reference_job.json"), "--overrides",
                            write("o.json", R"([{"pSortFactor": 5}, {"pSortFactor": 100}])"),
                            "--format", "machine", "--csv", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  ASSERT_EQ(doc["results"]["whatif"].size(), 2u);
  EXPECT_EQ(doc["results"]["whatif"][0]["row"], 0);
  const std::string text = read_text_file(csv);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}

TEST_F(CliTest, WhatIfEmptyAndAllInvalid) {
  const CliRun empty = mrperf_cli(
      {"whatif", "--spec", sample("reference_job.json"), "--overrides", write("e.json", "[]")});
  EXPECT_EQ(empty.code, 0) << empty.err;
  const CliRun invalid = mrperf_cli({"whatif", "--spec", sample("reference_job.json"), "--overrides",
                                  write("i.json", R"([{"pSpillPerc": 0}])")});
  EXPECT_EQ(invalid.code, 1);
  EXPECT_NE(invalid.out.find("pSpillPerc"), std::string::npos);
  const CliRun mixed = mrperf_cli(
      {"whatif", "--spec", sample("reference_job.json"), "--overrides", sample("overrides.json")});
  EXPECT_EQ(mixed.code, 0);
}

TEST_F(CliTest, OptimizeGrid) {
  const std::string csv = (dir_ / "grid.csv").string();
  const CliRun r = mrperf_cli({"optimize", "--spec", sample("reference_job.json"), "--space",
                            sample("space.json"), "--format", "machine", "--csv", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["results"]["table"].size(), 9u);
  EXPECT_EQ(doc["results"]["best"]["pNumReducers"], 40);
  const std::string text = read_text_file(csv);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10);

  const CliRun table = mrperf_cli(
      {"optimize", "--spec", sample("reference_job.json"), "--space", sample("space.json")});
  EXPECT_NE(table.out.find("Best configuration: pNumReducers=40 pSortFactor=10"),
            std::string::npos)
      << table.out;
}

TEST_F(CliTest, OptimizeEmptyGridAndBadSpace) {
  EXPECT_EQ(mrperf_cli({"optimize", "--spec", sample("reference_job.json"), "--space",
                        write("s.json", R"({"pSpillPerc": [0, 2]})")})
                .code,
            1);
  EXPECT_EQ(mrperf_cli({"optimize", "--spec", sample("reference_job.json"), "--space",
                        write("n.json", R"({"pNumNodes": [2]})")})
                .code,
            1);
  EXPECT_EQ(mrperf_cli({"optimize", "--spec", sample("reference_job.json"), "--space",
                        (dir_ / "none.json").string()})
                .code,
            2);
}
