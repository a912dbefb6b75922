#include <gtest/gtest.h>

#include "mrperf/merge_math.h"
#include "support/merge_oracle.h"

using namespace mrperf;
using mrperf::testing::brute_force_merge;

TEST(ClosedForms, FirstPass) {
  EXPECT_EQ(first_pass_spills(5, 10), 5);
  EXPECT_EQ(first_pass_spills(30, 10), 3);
  EXPECT_EQ(first_pass_spills(19, 10), 10);
}

TEST(ClosedForms, IntermediateReads) {
  EXPECT_EQ(interm_merge_spills(8, 10), 0);
  EXPECT_EQ(interm_merge_spills(30, 10), 23);
  EXPECT_EQ(interm_merge_spills(100, 10), 100);
}

TEST(ClosedForms, FinalMerge) {
  EXPECT_EQ(final_merge_spills(7, 10), 7);
  EXPECT_EQ(final_merge_spills(30, 10), 10);
  EXPECT_EQ(final_merge_spills(100, 10), 10);
}

TEST(ClosedForms, PassCount) {
  EXPECT_EQ(merge_pass_count(1, 10), 0);
  EXPECT_EQ(merge_pass_count(10, 10), 1);
  EXPECT_EQ(merge_pass_count(30, 10), 4);
}

TEST(ClosedForms, DomainErrors) {
  EXPECT_THROW(first_pass_spills(0, 10), std::invalid_argument);
  EXPECT_THROW(first_pass_spills(5, 1), std::invalid_argument);
  EXPECT_THROW(interm_merge_spills(101, 10), std::invalid_argument);
  EXPECT_THROW(final_merge_spills(101, 10), std::invalid_argument);
  EXPECT_THROW(merge_pass_count(101, 10), std::invalid_argument);
  EXPECT_THROW(simulate_merge_plan(0, 10), std::invalid_argument);
  EXPECT_THROW(simulate_merge_plan(5, 1), std::invalid_argument);
}

TEST(MergePlan, ThirtyRunsFanInTen) {
  const MergePlan p = simulate_merge_plan(30, 10);
  EXPECT_EQ(p.first_pass_runs, 3);
  EXPECT_EQ(p.interm_reads, 23);
  EXPECT_EQ(p.final_merge_inputs, 10);
  EXPECT_EQ(p.pass_count, 4);
}

TEST(MergePlan, SingleRun) {
  const MergePlan p = simulate_merge_plan(1, 10);
  EXPECT_EQ(p.first_pass_runs, 1);
  EXPECT_EQ(p.interm_reads, 0);
  EXPECT_EQ(p.final_merge_inputs, 1);
  EXPECT_EQ(p.pass_count, 0);
}

TEST(MergePlan, BeyondClosedForm) {
  const MergePlan p = simulate_merge_plan(101, 10);
  EXPECT_EQ(p.pass_count, 12);
  EXPECT_LE(p.final_merge_inputs, 10);
}

TEST(MergePlan, PolicyMatchesClosedFormsInsideDomain) {
  for (std::int64_t f = 2; f <= 12; ++f) {
    for (std::int64_t n = 1; n <= f * f; ++n) {
      const MergePlan p = run_merge_policy(n, f);
      ASSERT_EQ(p.first_pass_runs, first_pass_spills(n, f)) << n << "," << f;
      ASSERT_EQ(p.interm_reads, interm_merge_spills(n, f)) << n << "," << f;
      ASSERT_EQ(p.interm_run_volume, p.interm_reads) << n << "," << f;
      ASSERT_EQ(p.final_merge_inputs, final_merge_spills(n, f)) << n << "," << f;
      ASSERT_EQ(p.pass_count, merge_pass_count(n, f)) << n << "," << f;
      ASSERT_EQ(simulate_merge_plan(n, f), p);
    }
  }
}

TEST(MergePlan, MatchesIndependentQueueReplay) {
  for (std::int64_t f = 2; f <= 16; ++f) {
    for (std::int64_t n = 1; n <= f * f * 3; ++n) {
      const MergePlan p = simulate_merge_plan(n, f);
      const auto o = brute_force_merge(n, f);
      ASSERT_EQ(p.first_pass_runs, o.first_pass) << n << "," << f;
      ASSERT_EQ(p.interm_reads, o.interm_reads) << n << "," << f;
      ASSERT_EQ(p.interm_run_volume, o.interm_volume) << n << "," << f;
      ASSERT_EQ(p.final_merge_inputs, o.final_inputs) << n << "," << f;
      ASSERT_EQ(p.pass_count, o.passes) << n << "," << f;
    }
  }
}

TEST(MergePlan, StructuralInvariants) {
  for (std::int64_t f = 2; f <= 20; ++f) {
    std::int64_t prev_passes = 0;
    for (std::int64_t n = 1; n <= f * f * 2; ++n) {
      const MergePlan p = simulate_merge_plan(n, f);
      ASSERT_LE(p.final_merge_inputs, f);
      ASSERT_GE(p.final_merge_inputs, 1);
      if (n <= f) {
        ASSERT_EQ(p.interm_reads, 0);
        ASSERT_EQ(p.final_merge_inputs, n);
      }
      // Every pass before the final one writes one intermediate file.
      const std::int64_t interm_files = n > 1 ? p.pass_count - 1 : 0;
      ASSERT_LE(p.interm_reads, n + interm_files);
      ASSERT_GE(p.interm_run_volume, p.interm_reads);
      if (n <= f * f) {
        ASSERT_GE(p.pass_count, prev_passes);
        prev_passes = p.pass_count;
      }
    }
  }
}
