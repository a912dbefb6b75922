#pragma once

#include <cstdint>

namespace mrperf {

// Shape of a multi-pass merge of `runs` sorted runs with fan-in `fan_in`.
//
// The first pass merges just enough runs that every later pass merges exactly
// `fan_in`; later passes consume the oldest runs; merging stops once at most
// `fan_in` runs remain, and those feed the final merge.
struct MergePlan {
  std::int64_t runs = 0;
  std::int64_t fan_in = 0;
  std::int64_t first_pass_runs = 0;
  // Runs read by the passes before the final merge.
  std::int64_t interm_reads = 0;
  // The same reads weighted by the number of original runs each contains.
  // Equal to interm_reads whenever runs <= fan_in^2; beyond that, merged runs
  // get re-read and this is the figure proportional to bytes moved.
  std::int64_t interm_run_volume = 0;
  std::int64_t final_merge_inputs = 0;
  // Intermediate passes plus the final merge; 0 for a single run.
  std::int64_t pass_count = 0;

  friend bool operator==(const MergePlan&, const MergePlan&) = default;
};

// True when runs <= fan_in^2, the range covered by the closed forms.
bool within_closed_form(std::int64_t runs, std::int64_t fan_in);

// Closed forms. All require runs >= 1 and fan_in >= 2 and throw
// std::invalid_argument otherwise; all but first_pass_spills additionally
// require within_closed_form(runs, fan_in).
std::int64_t first_pass_spills(std::int64_t runs, std::int64_t fan_in);
std::int64_t interm_merge_spills(std::int64_t runs, std::int64_t fan_in);
std::int64_t final_merge_spills(std::int64_t runs, std::int64_t fan_in);
std::int64_t merge_pass_count(std::int64_t runs, std::int64_t fan_in);

// Replays the merge policy pass by pass. Valid for any runs >= 1.
MergePlan run_merge_policy(std::int64_t runs, std::int64_t fan_in);

// Entry point used by the task models: closed forms when they apply,
// otherwise run_merge_policy.
MergePlan simulate_merge_plan(std::int64_t runs, std::int64_t fan_in);

}  // namespace mrperf
