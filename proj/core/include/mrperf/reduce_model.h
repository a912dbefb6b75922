#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "mrperf/cost_vector.h"
#include "mrperf/params.h"

namespace mrperf {

enum class ReducePhase { kShuffle, kSort, kWrite };
inline constexpr std::array<ReducePhase, 3> kReducePhases = {
    ReducePhase::kShuffle, ReducePhase::kSort, ReducePhase::kWrite};
std::string_view to_string(ReducePhase phase);

// One map task's partition destined for one reducer.
struct SegmentSpec {
  double compr_size = 0.0;
  double uncompr_size = 0.0;
  double pairs = 0.0;
};

struct ShuffleOutcome {
  double total_shuffle_size = 0.0;
  double total_shuffle_pairs = 0.0;
  double shuffle_buffer_size = 0.0;
  double merge_size_threshold = 0.0;
  // Segment too large for the in-memory buffer: each goes straight to disk.
  bool case_two = false;
  std::int64_t num_seg_in_shuffle_file = 0;
  double shuffle_file_size = 0.0;
  double shuffle_file_pairs = 0.0;
  std::int64_t num_shuffle_files = 0;
  std::int64_t num_segments_in_mem = 0;
  std::int64_t num_shuffle_merges = 0;
  std::int64_t num_merged_files = 0;
  double merged_file_size = 0.0;
  double merged_file_pairs = 0.0;
  std::int64_t num_unmerged_files = 0;
  double unmerged_file_size = 0.0;
  double unmerged_file_pairs = 0.0;
  CostVector cost;
};

struct SortOutcome {
  double max_segment_buffer = 0.0;
  double curr_segment_buffer = 0.0;
  std::int64_t num_segments_evicted = 0;
  std::int64_t num_segments_remain_mem = 0;
  std::int64_t num_files_on_disk = 0;
  std::int64_t num_files_from_mem = 0;
  double files_from_mem_size = 0.0;
  double files_from_mem_pairs = 0.0;
  double step1_merging_size = 0.0;
  double step1_merging_pairs = 0.0;
  std::int64_t files_to_merge_step2 = 0;
  double step2_merging_size = 0.0;
  double step2_merging_pairs = 0.0;
  std::int64_t files_remain_from_step2 = 0;
  std::int64_t files_to_merge_step3 = 0;
  double step3_merging_size = 0.0;
  double step3_merging_pairs = 0.0;
  std::int64_t files_remain_from_step3 = 0;
  double total_merging_size = 0.0;
  double total_merging_pairs = 0.0;
  CostVector cost;
};

struct WriteOutcome {
  double in_reduce_size = 0.0;
  double in_reduce_pairs = 0.0;
  double out_reduce_size = 0.0;
  double out_reduce_pairs = 0.0;
  // Reduce input that is read back from local disk.
  double in_reduce_disk_size = 0.0;
  CostVector cost;
};

struct ReduceTaskEstimate {
  SegmentSpec segment;
  ShuffleOutcome shuffle;
  SortOutcome sort;
  WriteOutcome write;
  std::array<CostVector, kReducePhases.size()> per_phase{};
  CostVector total;  // network transfer excluded

  const CostVector& phase(ReducePhase p) const {
    return per_phase[static_cast<std::size_t>(p)];
  }
};

// `interm_data_size`/`interm_data_pairs` are one map task's final output.
// All of these throw std::invalid_argument for map-only jobs.
SegmentSpec segment_spec(const EffectiveInputs& in, double interm_data_size,
                         double interm_data_pairs);
// Throws ModelError for an empty segment that would have to be buffered.
ShuffleOutcome shuffle_phase(const EffectiveInputs& in, const SegmentSpec& segment);
SortOutcome reduce_merge_phase(const EffectiveInputs& in, const SegmentSpec& segment,
                               const ShuffleOutcome& shuffle);
WriteOutcome reduce_write_phase(const EffectiveInputs& in, const SegmentSpec& segment,
                                const ShuffleOutcome& shuffle, const SortOutcome& sort);

ReduceTaskEstimate reduce_task_cost(const EffectiveInputs& in, double interm_data_size,
                                    double interm_data_pairs);

}  // namespace mrperf
