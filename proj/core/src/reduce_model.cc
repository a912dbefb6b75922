#include "mrperf/reduce_model.h"

#include <algorithm>
#include <stdexcept>

#include "mrperf/errors.h"
#include "mrperf/merge_math.h"
#include "numeric.h"

namespace mrperf {

namespace {

// A segment larger than this fraction of the shuffle buffer bypasses memory.
constexpr double kMaxInMemSegmentFraction = 0.25;

void require_reducers(const EffectiveInputs& in) {
  if (in.config().num_reducers < 1) {
    throw std::invalid_argument("map-only jobs have no reduce tasks");
  }
}

struct MergeShare {
  std::int64_t remaining = 0;
  double fraction = 0.0;  // share of the input volume read by intermediate passes
};

MergeShare merge_share(std::int64_t files, std::int64_t fan_in) {
  if (files <= 0) return {};
  const MergePlan plan = simulate_merge_plan(files, fan_in);
  return {plan.final_merge_inputs,
          static_cast<double>(plan.interm_run_volume) / static_cast<double>(files)};
}

}  // namespace

std::string_view to_string(ReducePhase phase) {
  switch (phase) {
    case ReducePhase::kShuffle: return "Shuffle";
    case ReducePhase::kSort: return "Sort";
    case ReducePhase::kWrite: return "Write";
  }
  return "?";
}

SegmentSpec segment_spec(const EffectiveInputs& in, double interm_data_size,
                         double interm_data_pairs) {
  require_reducers(in);
  const double reducers = static_cast<double>(in.config().num_reducers);
  SegmentSpec s;
  s.compr_size = interm_data_size / reducers;
  s.uncompr_size = s.compr_size / in.profile().interm_compress_ratio;
  s.pairs = interm_data_pairs / reducers;
  return s;
}

ShuffleOutcome shuffle_phase(const EffectiveInputs& in, const SegmentSpec& segment) {
  require_reducers(in);
  const auto& c = in.config();
  const auto& p = in.profile();
  const auto& k = in.costs();
  const std::int64_t mappers = c.num_mappers;
  const std::int64_t fan_in = c.sort_factor;

  ShuffleOutcome s;
  s.total_shuffle_size = static_cast<double>(mappers) * segment.compr_size;
  s.total_shuffle_pairs = static_cast<double>(mappers) * segment.pairs;
  s.shuffle_buffer_size = c.shuffle_input_buffer_percent * c.task_mem;
  s.merge_size_threshold = c.shuffle_merge_percent * s.shuffle_buffer_size;
  s.case_two = !(segment.uncompr_size < kMaxInMemSegmentFraction * s.shuffle_buffer_size);

  if (!s.case_two) {
    if (!(segment.uncompr_size > 0.0)) {
      throw ModelError("shuffle segment is empty; segments per shuffle file is undefined");
    }
    const double ideal = s.merge_size_threshold / segment.uncompr_size;
    double segs = detail::ceil_snapped(ideal);
    if (segs * segment.uncompr_size > s.shuffle_buffer_size) segs = detail::floor_snapped(ideal);
    std::int64_t n = std::min(detail::to_count(segs), c.in_mem_merge_threshold);
    s.num_seg_in_shuffle_file = std::max<std::int64_t>(n, 1);

    const double nseg = static_cast<double>(s.num_seg_in_shuffle_file);
    s.shuffle_file_size = nseg * segment.compr_size * p.combine_size_sel;
    s.shuffle_file_pairs = nseg * segment.pairs * p.combine_pairs_sel;
    s.num_shuffle_files = mappers / s.num_seg_in_shuffle_file;
    s.num_segments_in_mem = mappers % s.num_seg_in_shuffle_file;
  } else {
    s.num_seg_in_shuffle_file = 1;
    s.shuffle_file_size = segment.compr_size;
    s.shuffle_file_pairs = segment.pairs;
    s.num_shuffle_files = mappers;
    s.num_segments_in_mem = 0;
  }

  // Background disk merges start once 2F-1 files sit on disk, F at a time.
  if (s.num_shuffle_files < 2 * fan_in - 1) {
    s.num_shuffle_merges = 0;
  } else {
    s.num_shuffle_merges = (s.num_shuffle_files - 2 * fan_in + 1) / fan_in + 1;
  }
  s.num_merged_files = s.num_shuffle_merges;
  s.merged_file_size = static_cast<double>(fan_in) * s.shuffle_file_size;
  s.merged_file_pairs = static_cast<double>(fan_in) * s.shuffle_file_pairs;
  s.num_unmerged_files = s.num_shuffle_files - fan_in * s.num_shuffle_merges;
  s.unmerged_file_size = s.shuffle_file_size;
  s.unmerged_file_pairs = s.shuffle_file_pairs;

  const double files = static_cast<double>(s.num_shuffle_files);
  const double merged = static_cast<double>(s.num_merged_files);
  s.cost.io = files * s.shuffle_file_size * k.local_io +
              merged * s.merged_file_size * 2.0 * k.local_io;
  const double in_memory_merging = s.case_two ? 0.0 : 1.0;
  s.cost.cpu =
      in_memory_merging *
          (s.total_shuffle_size * k.interm_uncompress_cpu +
           files * s.shuffle_file_pairs * k.merge_cpu +
           files * s.shuffle_file_pairs * k.combine_cpu +
           files * s.shuffle_file_size / p.interm_compress_ratio * k.interm_compress_cpu) +
      merged * s.merged_file_size * k.interm_uncompress_cpu +
      merged * s.merged_file_pairs * k.merge_cpu +
      merged * s.merged_file_size / p.interm_compress_ratio * k.interm_compress_cpu;
  return s;
}

SortOutcome reduce_merge_phase(const EffectiveInputs& in, const SegmentSpec& segment,
                               const ShuffleOutcome& shuffle) {
  require_reducers(in);
  const auto& c = in.config();
  const auto& p = in.profile();
  const auto& k = in.costs();
  const std::int64_t fan_in = c.sort_factor;

  SortOutcome s;

  // Step 1: evict in-memory segments beyond the reduce input buffer.
  s.max_segment_buffer = c.reducer_input_buffer_percent * c.task_mem;
  s.curr_segment_buffer = static_cast<double>(shuffle.num_segments_in_mem) * segment.uncompr_size;
  if (s.curr_segment_buffer > s.max_segment_buffer && segment.uncompr_size > 0.0) {
    const double excess =
        (s.curr_segment_buffer - s.max_segment_buffer) / segment.uncompr_size;
    s.num_segments_evicted =
        std::min(detail::to_count(detail::ceil_snapped(excess)), shuffle.num_segments_in_mem);
  }
  s.num_segments_remain_mem = shuffle.num_segments_in_mem - s.num_segments_evicted;

  s.num_files_on_disk = shuffle.num_merged_files + shuffle.num_unmerged_files;
  const double evicted = static_cast<double>(s.num_segments_evicted);
  if (s.num_files_on_disk < fan_in) {
    // Evicted segments are merged into one new file; no file if none evicted.
    s.num_files_from_mem = s.num_segments_evicted > 0 ? 1 : 0;
    s.files_from_mem_size = evicted * segment.compr_size;
    s.files_from_mem_pairs = evicted * segment.pairs;
    s.step1_merging_size = s.files_from_mem_size;
    s.step1_merging_pairs = s.files_from_mem_pairs;
  } else {
    // Too many files on disk already: evicted segments join the disk merge as-is.
    s.num_files_from_mem = s.num_segments_evicted;
    s.files_from_mem_size = segment.compr_size;
    s.files_from_mem_pairs = segment.pairs;
  }
  s.files_to_merge_step2 = s.num_files_on_disk + s.num_files_from_mem;

  // Step 2: multi-pass merge of the files on disk, costs attributed
  // proportionally since the files differ in size.
  const double disk_size =
      static_cast<double>(shuffle.num_merged_files) * shuffle.merged_file_size +
      static_cast<double>(shuffle.num_unmerged_files) * shuffle.unmerged_file_size +
      static_cast<double>(s.num_files_from_mem) * s.files_from_mem_size;
  const double disk_pairs =
      static_cast<double>(shuffle.num_merged_files) * shuffle.merged_file_pairs +
      static_cast<double>(shuffle.num_unmerged_files) * shuffle.unmerged_file_pairs +
      static_cast<double>(s.num_files_from_mem) * s.files_from_mem_pairs;
  if (s.num_files_on_disk > 0) {
    const MergeShare step2 = merge_share(s.files_to_merge_step2, fan_in);
    s.step2_merging_size = step2.fraction * disk_size;
    s.step2_merging_pairs = step2.fraction * disk_pairs;
    s.files_remain_from_step2 = step2.remaining;
  } else {
    s.files_remain_from_step2 = s.files_to_merge_step2;
  }

  // Step 3: everything left on disk plus what stayed in memory.
  s.files_to_merge_step3 = s.files_remain_from_step2 + s.num_segments_remain_mem;
  const MergeShare step3 = merge_share(s.files_to_merge_step3, fan_in);
  s.step3_merging_size = step3.fraction * shuffle.total_shuffle_size;
  s.step3_merging_pairs = step3.fraction * shuffle.total_shuffle_pairs;
  s.files_remain_from_step3 = step3.remaining;

  s.total_merging_size = s.step1_merging_size + s.step2_merging_size + s.step3_merging_size;
  s.total_merging_pairs = s.step1_merging_pairs + s.step2_merging_pairs + s.step3_merging_pairs;

  s.cost.io = s.total_merging_size * k.local_io;
  s.cost.cpu = s.total_merging_pairs * k.merge_cpu +
               s.total_merging_size / p.interm_compress_ratio * k.interm_compress_cpu +
               (s.step2_merging_size + s.step3_merging_size) * k.interm_uncompress_cpu;
  return s;
}

WriteOutcome reduce_write_phase(const EffectiveInputs& in, const SegmentSpec& segment,
                                const ShuffleOutcome& shuffle, const SortOutcome& sort) {
  require_reducers(in);
  const auto& p = in.profile();
  const auto& k = in.costs();

  WriteOutcome w;
  const double files = static_cast<double>(shuffle.num_shuffle_files);
  const double in_mem = static_cast<double>(shuffle.num_segments_in_mem);
  // Grouped per segment so that, without a combiner, the segment count sums
  // to pNumMappers exactly and the totals match the shuffle totals bit for bit.
  const double per_file = static_cast<double>(shuffle.num_seg_in_shuffle_file);
  const double size_sel = shuffle.case_two ? 1.0 : p.combine_size_sel;
  const double pairs_sel = shuffle.case_two ? 1.0 : p.combine_pairs_sel;
  w.in_reduce_size =
      (files * per_file * size_sel + in_mem) * segment.compr_size / p.interm_compress_ratio;
  w.in_reduce_pairs = (files * per_file * pairs_sel + in_mem) * segment.pairs;
  w.out_reduce_size = w.in_reduce_size * p.reduce_size_sel;
  w.out_reduce_pairs = w.in_reduce_pairs * p.reduce_pairs_sel;
  w.in_reduce_disk_size =
      static_cast<double>(shuffle.num_merged_files) * shuffle.merged_file_size +
      static_cast<double>(shuffle.num_unmerged_files) * shuffle.unmerged_file_size +
      static_cast<double>(sort.num_files_from_mem) * sort.files_from_mem_size;

  w.cost.io = w.in_reduce_disk_size * k.local_io +
              w.out_reduce_size * p.out_compress_ratio * k.hdfs_write;
  w.cost.cpu = w.in_reduce_pairs * k.reduce_cpu +
               w.in_reduce_disk_size * k.interm_uncompress_cpu +
               w.out_reduce_size * k.out_compress_cpu;
  return w;
}

ReduceTaskEstimate reduce_task_cost(const EffectiveInputs& in, double interm_data_size,
                                    double interm_data_pairs) {
  ReduceTaskEstimate est;
  est.segment = segment_spec(in, interm_data_size, interm_data_pairs);
  est.shuffle = shuffle_phase(in, est.segment);
  est.sort = reduce_merge_phase(in, est.segment, est.shuffle);
  est.write = reduce_write_phase(in, est.segment, est.shuffle, est.sort);
  est.per_phase[static_cast<std::size_t>(ReducePhase::kShuffle)] = est.shuffle.cost;
  est.per_phase[static_cast<std::size_t>(ReducePhase::kSort)] = est.sort.cost;
  est.per_phase[static_cast<std::size_t>(ReducePhase::kWrite)] = est.write.cost;
  for (const auto& c : est.per_phase) est.total += c;
  return est;
}

}  // namespace mrperf
