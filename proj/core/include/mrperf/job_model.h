#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mrperf/cost_vector.h"
#include "mrperf/map_model.h"
#include "mrperf/network_model.h"
#include "mrperf/params.h"
#include "mrperf/reduce_model.h"

namespace mrperf {

enum class EstimationMethod { kAnalytic, kSimulated };
std::string_view to_string(EstimationMethod method);

struct JobEstimate {
  EstimationMethod method = EstimationMethod::kAnalytic;
  MapTaskEstimate map_task;
  std::optional<ReduceTaskEstimate> reduce_task;  // absent for map-only jobs
  NetworkEstimate network;

  // Tasks per slot, fractional: the analytic path's implicit wave count.
  double map_waves = 0.0;
  double reduce_waves = 0.0;
  CostVector all_maps;      // io/cpu of all map tasks spread over the map slots
  CostVector all_reducers;  // likewise for reduce tasks

  double io_job = 0.0;
  double cpu_job = 0.0;
  double net_job = 0.0;
  double cost_job = 0.0;
};

// Slot-normalized totals of the per-task models plus network cost.
JobEstimate analytic_job_cost(const EffectiveInputs& in);

enum class TaskKind { kMap, kReduce };
std::string_view to_string(TaskKind kind);

struct TaskEvent {
  TaskKind kind = TaskKind::kMap;
  std::int64_t task_index = 0;
  std::int64_t wave = 0;  // 0-based; number of earlier tasks on the same slot
  std::int64_t slot = 0;
  double start_cost = 0.0;
  double end_cost = 0.0;
};

struct SimTimeline {
  std::vector<TaskEvent> events;  // maps first, each kind in task order
  std::int64_t map_waves = 0;
  std::int64_t reduce_waves = 0;
  double reduce_release_cost = 0.0;  // when the slowstart fraction of maps is done
  double makespan_cost = 0.0;        // last task completion plus network cost
};

struct SimulationResult {
  JobEstimate estimate;  // method = kSimulated; job totals as in the analytic path
  SimTimeline timeline;
};

// Greedy FIFO scheduling of identical tasks onto map and reduce slots, each
// task occupying its slot for io+cpu cost units. Reduce tasks are released
// once ceil(pReduceSlowstart * pNumMappers) maps have finished.
SimulationResult simulate_job(const EffectiveInputs& in);

// One header line, then task_kind,task_index,wave,start_cost,end_cost per event.
std::string timeline_to_csv(const SimTimeline& timeline);

}  // namespace mrperf
