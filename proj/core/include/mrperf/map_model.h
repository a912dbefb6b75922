#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "mrperf/cost_vector.h"
#include "mrperf/merge_math.h"
#include "mrperf/params.h"

namespace mrperf {

enum class MapPhase { kRead, kMap, kCollect, kSpill, kMerge, kMapWrite };
inline constexpr std::array<MapPhase, 6> kMapPhases = {
    MapPhase::kRead,  MapPhase::kMap,   MapPhase::kCollect,
    MapPhase::kSpill, MapPhase::kMerge, MapPhase::kMapWrite};
std::string_view to_string(MapPhase phase);

struct MapDataflow {
  double input_map_size = 0.0;   // bytes, uncompressed
  double input_map_pairs = 0.0;
  double out_map_size = 0.0;
  double out_map_pairs = 0.0;
  double out_pair_width = 0.0;   // 0 when the map emits nothing
};

struct ReadMapResult {
  MapDataflow dataflow;
  CostVector read;  // HDFS read and input decompression
  CostVector map;   // map function
  CostVector cost() const { return read + map; }
};

struct SpillSpec {
  std::int64_t max_ser_pairs = 0;
  std::int64_t max_acc_pairs = 0;
  double spill_buffer_pairs = 0.0;
  double spill_buffer_size = 0.0;
  std::int64_t num_spills = 0;
  double spill_file_size = 0.0;
  double spill_file_pairs = 0.0;
};

struct SpillResult {
  SpillSpec spill;
  CostVector cost;
};

struct MergeResult {
  std::optional<MergePlan> plan;  // absent for a single spill
  bool combine_in_merge = false;
  double interm_data_size = 0.0;
  double interm_data_pairs = 0.0;
  double num_rec_spilled = 0.0;
  CostVector cost;
};

struct MapTaskEstimate {
  MapDataflow dataflow;
  std::optional<SpillSpec> spill;       // absent for map-only jobs
  std::optional<MergePlan> merge_plan;  // absent for map-only jobs or a single spill
  bool combine_in_merge = false;
  // Final map output (input to the shuffle); zero for map-only jobs.
  double interm_data_size = 0.0;
  double interm_data_pairs = 0.0;
  double num_rec_spilled = 0.0;
  std::array<CostVector, kMapPhases.size()> per_phase{};
  CostVector total;

  const CostVector& phase(MapPhase p) const { return per_phase[static_cast<std::size_t>(p)]; }
};

ReadMapResult read_map_phase(const EffectiveInputs& in);

// Map-only jobs write map output straight to HDFS. Throws
// std::invalid_argument if the job has reducers.
CostVector map_write_phase(const EffectiveInputs& in, const MapDataflow& dataflow);

// Throws std::invalid_argument for map-only jobs or an empty map output.
SpillResult collect_spill_phase(const EffectiveInputs& in, const MapDataflow& dataflow);

MergeResult map_merge_phase(const EffectiveInputs& in, const SpillSpec& spill);

MapTaskEstimate map_task_cost(const EffectiveInputs& in);

}  // namespace mrperf
