#include "mrperf/map_model.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mrperf/errors.h"
#include "numeric.h"

namespace mrperf {

namespace {

constexpr double kMiB = 1024.0 * 1024.0;
// Bytes of accounting metadata kept per buffered record.
constexpr double kAccountingBytesPerRecord = 16.0;

CostVector& slot(MapTaskEstimate& est, MapPhase p) {
  return est.per_phase[static_cast<std::size_t>(p)];
}

}  // namespace

std::string_view to_string(MapPhase phase) {
  switch (phase) {
    case MapPhase::kRead: return "Read";
    case MapPhase::kMap: return "Map";
    case MapPhase::kCollect: return "Collect";
    case MapPhase::kSpill: return "Spill";
    case MapPhase::kMerge: return "Merge";
    case MapPhase::kMapWrite: return "MapWrite";
  }
  return "?";
}

ReadMapResult read_map_phase(const EffectiveInputs& in) {
  const auto& c = in.config();
  const auto& p = in.profile();
  const auto& k = in.costs();

  ReadMapResult r;
  auto& d = r.dataflow;
  d.input_map_size = c.split_size / p.input_compress_ratio;
  d.input_map_pairs = d.input_map_size / p.input_pair_width;
  d.out_map_size = d.input_map_size * p.map_size_sel;
  d.out_map_pairs = d.input_map_pairs * p.map_pairs_sel;
  d.out_pair_width = d.out_map_pairs > 0.0 ? d.out_map_size / d.out_map_pairs : 0.0;

  r.read.io = c.split_size * k.hdfs_read;
  r.read.cpu = c.split_size * k.in_uncompress_cpu;
  r.map.cpu = d.input_map_pairs * k.map_cpu;
  return r;
}

CostVector map_write_phase(const EffectiveInputs& in, const MapDataflow& dataflow) {
  if (in.config().num_reducers != 0) {
    throw std::invalid_argument("map output is written to HDFS only for map-only jobs");
  }
  const auto& p = in.profile();
  const auto& k = in.costs();
  return {.io = dataflow.out_map_size * p.out_compress_ratio * k.hdfs_write,
          .cpu = dataflow.out_map_size * k.out_compress_cpu};
}

SpillResult collect_spill_phase(const EffectiveInputs& in, const MapDataflow& dataflow) {
  const auto& c = in.config();
  const auto& p = in.profile();
  const auto& k = in.costs();
  if (c.num_reducers < 1) {
    throw std::invalid_argument("map-only jobs have no collect/spill phase");
  }
  if (!(dataflow.out_map_pairs > 0.0) || !(dataflow.out_pair_width > 0.0)) {
    throw std::invalid_argument("collect/spill phase needs a non-empty map output");
  }

  SpillResult r;
  SpillSpec& s = r.spill;
  const double buffer = c.sort_mb * kMiB;
  s.max_ser_pairs = detail::to_count(detail::floor_snapped(
      buffer * (1.0 - c.sort_record_percent) * c.spill_percent / dataflow.out_pair_width));
  s.max_acc_pairs = detail::to_count(detail::floor_snapped(
      buffer * c.sort_record_percent * c.spill_percent / kAccountingBytesPerRecord));
  if (s.max_ser_pairs < 1 || s.max_acc_pairs < 1) {
    throw ModelError("map sort buffer cannot hold a single record");
  }

  s.spill_buffer_pairs = std::min({static_cast<double>(s.max_ser_pairs),
                                   static_cast<double>(s.max_acc_pairs), dataflow.out_map_pairs});
  s.spill_buffer_size = s.spill_buffer_pairs * dataflow.out_pair_width;
  s.num_spills =
      detail::to_count(detail::ceil_snapped(dataflow.out_map_pairs / s.spill_buffer_pairs));
  s.spill_file_pairs = s.spill_buffer_pairs * p.combine_pairs_sel;
  s.spill_file_size = s.spill_buffer_size * p.combine_size_sel * p.interm_compress_ratio;

  const double spills = static_cast<double>(s.num_spills);
  const double pairs = s.spill_buffer_pairs;
  const double per_partition =
      std::max(2.0, pairs / static_cast<double>(c.num_reducers));
  r.cost.io = spills * s.spill_file_size * k.local_io;
  r.cost.cpu = spills * (pairs * k.partition_cpu + pairs * k.serde_cpu +
                         pairs * std::log2(per_partition) * k.sort_cpu + pairs * k.combine_cpu +
                         s.spill_buffer_size * p.combine_size_sel * k.interm_compress_cpu);
  return r;
}

MergeResult map_merge_phase(const EffectiveInputs& in, const SpillSpec& spill) {
  const auto& c = in.config();
  const auto& p = in.profile();
  const auto& k = in.costs();
  if (c.num_reducers < 1) {
    throw std::invalid_argument("map-only jobs have no merge phase");
  }

  MergeResult r;
  if (spill.num_spills <= 1) {
    // The single spill file already is the final map output.
    r.interm_data_size = spill.spill_file_size;
    r.interm_data_pairs = spill.spill_file_pairs;
    r.num_rec_spilled = spill.spill_file_pairs;
    return r;
  }

  const MergePlan plan = simulate_merge_plan(spill.num_spills, c.sort_factor);
  r.plan = plan;
  r.combine_in_merge = c.use_combine && plan.final_merge_inputs >= c.num_spills_for_combine;

  const double spills = static_cast<double>(spill.num_spills);
  const double interm = static_cast<double>(plan.interm_run_volume);
  r.interm_data_size =
      spills * spill.spill_file_size * (r.combine_in_merge ? p.combine_size_sel : 1.0);
  r.interm_data_pairs =
      spills * spill.spill_file_pairs * (r.combine_in_merge ? p.combine_pairs_sel : 1.0);
  r.num_rec_spilled = spill.spill_file_pairs * (spills + interm + spills * p.combine_pairs_sel);

  const double file_size = spill.spill_file_size;
  const double file_pairs = spill.spill_file_pairs;
  const double combine_cpu = r.combine_in_merge ? k.combine_cpu : 0.0;
  r.cost.io = (2.0 * interm * file_size + spills * file_size + r.interm_data_size) * k.local_io;
  r.cost.cpu =
      interm * (file_size * k.interm_uncompress_cpu + file_pairs * k.merge_cpu +
                file_size / p.interm_compress_ratio * k.interm_compress_cpu) +
      spills * (file_size * k.interm_uncompress_cpu + file_pairs * k.merge_cpu +
                file_pairs * combine_cpu) +
      r.interm_data_size / p.interm_compress_ratio * k.interm_compress_cpu;
  return r;
}

MapTaskEstimate map_task_cost(const EffectiveInputs& in) {
  MapTaskEstimate est;
  const ReadMapResult read = read_map_phase(in);
  est.dataflow = read.dataflow;
  slot(est, MapPhase::kRead) = read.read;
  slot(est, MapPhase::kMap) = read.map;

  if (in.config().num_reducers == 0) {
    slot(est, MapPhase::kMapWrite) = map_write_phase(in, est.dataflow);
  } else {
    const SpillResult spill = collect_spill_phase(in, est.dataflow);
    const MergeResult merge = map_merge_phase(in, spill.spill);
    est.spill = spill.spill;
    est.merge_plan = merge.plan;
    est.combine_in_merge = merge.combine_in_merge;
    est.interm_data_size = merge.interm_data_size;
    est.interm_data_pairs = merge.interm_data_pairs;
    est.num_rec_spilled = merge.num_rec_spilled;
    // Collect costs are charged within the spill phase.
    slot(est, MapPhase::kSpill) = spill.cost;
    slot(est, MapPhase::kMerge) = merge.cost;
  }
  for (const auto& c : est.per_phase) est.total += c;
  return est;
}

}  // namespace mrperf
