#include <gtest/gtest.h>

#include "mrperf/errors.h"
#include "mrperf/job_model.h"
#include "mrperf/optimizer.h"
#include "support/approx.h"
#include "support/reference_job.h"

using namespace mrperf;
using namespace mrperf::testing;

namespace {

PartialHadoopConfig one(HadoopParam id, ParamValue v) {
  PartialHadoopConfig p;
  p.set(id, v);
  return p;
}

ParameterSpace reducers_by_sort_factor() {
  ParameterSpace space;
  space.add(HadoopParam::kNumReducers, {std::int64_t{10}, std::int64_t{20}, std::int64_t{40}});
  space.add(HadoopParam::kSortFactor, {std::int64_t{5}, std::int64_t{10}, std::int64_t{20}});
  return space;
}

}  // namespace

TEST(WhatIf, EmptyOverrideEqualsBase) {
  const JobInputs base = reference_job_inputs();
  const auto rows = whatif(base, {PartialHadoopConfig{}});
  ASSERT_EQ(rows.size(), 1u);
  ASSERT_TRUE(rows[0].estimate);
  EXPECT_EQ(rows[0].estimate->cost_job, analytic_job_cost(normalize(base)).cost_job);
  EXPECT_EQ(rows[0].config, base.config);
}

TEST(WhatIf, RowsInInputOrderAndLargerFanInMergesLess) {
  JobInputs base = reference_job_inputs();
  base.config.split_size = 30.0 * 262144.0 * 128.0;  // 30 spills
  const auto rows = whatif(base, {one(HadoopParam::kSortFactor, std::int64_t{5}),
                                  one(HadoopParam::kSortFactor, std::int64_t{100})});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].config.sort_factor, 5);
  EXPECT_EQ(rows[1].config.sort_factor, 100);
  const auto& a = rows[0].estimate->map_task.merge_plan;
  const auto& b = rows[1].estimate->map_task.merge_plan;
  ASSERT_TRUE(a && b);
  EXPECT_LE(b->pass_count, a->pass_count);
}

TEST(WhatIf, InvalidOverrideIsAPerRowError) {
  const auto rows = whatif(reference_job_inputs(), {one(HadoopParam::kSpillPerc, 0.0),
                                                  PartialHadoopConfig{}});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].estimate);
  EXPECT_NE(rows[0].error.find("pSpillPerc"), std::string::npos);
  EXPECT_TRUE(rows[1].estimate);
}

TEST(WhatIf, CompressionToggleSeesProfileRatio) {
  JobInputs base = reference_job_inputs();
  base.profile.interm_compress_ratio = 0.5;
  const auto rows = whatif(base, {PartialHadoopConfig{},
                                  one(HadoopParam::kIsIntermCompressed, true)});
  const JobEstimate& off = *rows[0].estimate;
  const JobEstimate& on = *rows[1].estimate;
  // Map-side figures before compression are untouched.
  EXPECT_EQ(off.map_task.dataflow.out_map_size, on.map_task.dataflow.out_map_size);
  EXPECT_EQ(off.map_task.phase(MapPhase::kRead), on.map_task.phase(MapPhase::kRead));
  // Compressed map output halves, and so does shuffle traffic.
  EXPECT_EQ(on.map_task.interm_data_size, 0.5 * off.map_task.interm_data_size);
  EXPECT_EQ(on.net_job, 0.5 * off.net_job);
  EXPECT_GT(on.map_task.phase(MapPhase::kSpill).cpu, off.map_task.phase(MapPhase::kSpill).cpu);
}

TEST(Space, OnlyJobParameters) {
  ParameterSpace space;
  EXPECT_THROW(space.add(HadoopParam::kNumNodes, {std::int64_t{4}}), std::invalid_argument);
  EXPECT_THROW(space.add(HadoopParam::kSplitSize, {1.0}), std::invalid_argument);
  EXPECT_THROW(space.add(HadoopParam::kSortFactor, {}), std::invalid_argument);
  space.add(HadoopParam::kSortFactor, {std::int64_t{4}});
  EXPECT_THROW(space.add(HadoopParam::kSortFactor, {std::int64_t{5}}), std::invalid_argument);
  EXPECT_EQ(space.size(), 1u);
}

TEST(Space, ParseShapes) {
  const auto a = parse_parameter_space(R"({"space": {"pNumReducers": [10, 20], "pUseCombine": [false, true]}})");
  ASSERT_EQ(a.dimensions().size(), 2u);
  EXPECT_EQ(a.dimensions()[0].param, HadoopParam::kNumReducers);
  EXPECT_EQ(a.size(), 4u);
  const auto b = parse_parameter_space(R"([{"name": "pSortMB", "candidates": [50, 100.5]}])");
  EXPECT_EQ(as_double(b.dimensions()[0].candidates[1]), 100.5);
  EXPECT_THROW(parse_parameter_space(R"({"pNumNodes": [1]})"), SpecError);
  EXPECT_THROW(parse_parameter_space(R"({"pBogus": [1]})"), SpecError);
  EXPECT_THROW(parse_parameter_space(R"({})"), SpecError);
  EXPECT_THROW(parse_parameter_space(R"({"pSortFactor": 3})"), SpecError);
}

TEST(Optimize, SingletonGrid) {
  ParameterSpace space;
  space.add(HadoopParam::kSortFactor, {std::int64_t{10}});
  const SearchResult r = optimize(reference_job_inputs(), space);
  ASSERT_EQ(r.table.size(), 1u);
  EXPECT_EQ(r.best, reference_job_inputs().config);
  EXPECT_EQ(r.best_cost, analytic_job_cost(normalize(reference_job_inputs())).cost_job);
}

TEST(Optimize, ThreeByThreeMatchesExhaustiveRecomputation) {
  const JobInputs base = reference_job_inputs();
  const SearchResult r = optimize(base, reducers_by_sort_factor());
  ASSERT_EQ(r.table.size(), 9u);

  double best = 0;
  HadoopConfig best_config;
  std::size_t row = 0;
  bool first = true;
  for (std::int64_t reducers : {10, 20, 40}) {
    for (std::int64_t fan_in : {5, 10, 20}) {
      JobInputs in = base;
      in.config.num_reducers = reducers;
      in.config.sort_factor = fan_in;
      const double cost = analytic_job_cost(normalize(in)).cost_job;
      EXPECT_EQ(r.table[row].config, in.config);
      EXPECT_EQ(r.table[row].cost_job, cost);
      if (first || cost < best) {
        best = cost;
        best_config = in.config;
        first = false;
      }
      ++row;
    }
  }
  EXPECT_EQ(r.best, best_config);
  EXPECT_EQ(r.best_cost, best);
}

TEST(Optimize, TiesGoToTheEarliestPoint) {
  // The reference job has two spills, so any fan-in >= 2 gives the same cost.
  ParameterSpace space;
  space.add(HadoopParam::kSortFactor, {std::int64_t{50}, std::int64_t{20}, std::int64_t{30}});
  const SearchResult r = optimize(reference_job_inputs(), space);
  EXPECT_EQ(r.table[0].cost_job, r.table[1].cost_job);
  EXPECT_EQ(r.best.sort_factor, 50);
}

TEST(Optimize, InvalidPointsAreSkippedWithReasons) {
  ParameterSpace space;
  space.add(HadoopParam::kSpillPerc, {0.0, 0.8, 1.5});
  const SearchResult r = optimize(reference_job_inputs(), space);
  EXPECT_EQ(r.table.size(), 1u);
  ASSERT_EQ(r.skipped.size(), 2u);
  EXPECT_EQ(r.skipped[0].indices, std::vector<std::size_t>{0});
  EXPECT_EQ(r.skipped[1].indices, std::vector<std::size_t>{2});
  EXPECT_NE(r.skipped[0].reason.find("pSpillPerc"), std::string::npos);
}

TEST(Optimize, AllInvalidThrows) {
  ParameterSpace space;
  space.add(HadoopParam::kSpillPerc, {0.0, 1.5});
  EXPECT_THROW(optimize(reference_job_inputs(), space), EmptyGridError);
}

TEST(Optimize, DeterministicAndScaleInvariant) {
  const JobInputs base = reference_job_inputs();
  const ParameterSpace space = reducers_by_sort_factor();
  const SearchResult a = optimize(base, space);
  const SearchResult b = optimize(base, space);
  EXPECT_EQ(search_table_csv(space, a), search_table_csv(space, b));
  EXPECT_EQ(a.best, b.best);

  JobInputs scaled = base;
  scaled.costs = base.costs.scaled(3);
  const SearchResult c = optimize(scaled, space);
  EXPECT_EQ(c.best, a.best);
  EXPECT_REL(c.best_cost, 3 * a.best_cost, 1e-12);
}

TEST(Optimize, CsvHeaderAndRows) {
  const ParameterSpace space = reducers_by_sort_factor();
  const std::string csv = search_table_csv(space, optimize(reference_job_inputs(), space));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "pNumReducers,pSortFactor,costJob,ioJob,cpuJob,netJob");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);
  EXPECT_NE(csv.find("\n10,5,"), std::string::npos);
}
