#include "mrperf/job_model.h"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <queue>
#include <utility>

#include "numeric.h"

namespace mrperf {

namespace {

// Schedules `count` identical tasks of length `duration` onto `slots` slots,
// none starting before `release`. Returns the events in task order.
std::vector<TaskEvent> schedule(TaskKind kind, std::int64_t count, std::int64_t slots,
                                double duration, double release) {
  using SlotState = std::pair<double, std::int64_t>;  // (free at, slot index)
  std::priority_queue<SlotState, std::vector<SlotState>, std::greater<>> free_slots;
  for (std::int64_t s = 0; s < slots; ++s) free_slots.emplace(release, s);
  std::vector<std::int64_t> runs_on_slot(static_cast<std::size_t>(slots), 0);

  std::vector<TaskEvent> events;
  events.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    auto [free_at, slot] = free_slots.top();
    free_slots.pop();
    TaskEvent e{.kind = kind,
                .task_index = i,
                .wave = runs_on_slot[static_cast<std::size_t>(slot)]++,
                .slot = slot,
                .start_cost = free_at,
                .end_cost = free_at + duration};
    free_slots.emplace(e.end_cost, slot);
    events.push_back(e);
  }
  return events;
}

std::int64_t wave_count(const std::vector<TaskEvent>& events) {
  std::int64_t waves = 0;
  for (const auto& e : events) waves = std::max(waves, e.wave + 1);
  return waves;
}

}  // namespace

std::string_view to_string(EstimationMethod method) {
  return method == EstimationMethod::kAnalytic ? "analytic" : "simulated";
}

std::string_view to_string(TaskKind kind) { return kind == TaskKind::kMap ? "map" : "reduce"; }

JobEstimate analytic_job_cost(const EffectiveInputs& in) {
  const auto& c = in.config();
  JobEstimate job;
  job.method = EstimationMethod::kAnalytic;
  job.map_task = map_task_cost(in);
  job.network = network_cost(in, job.map_task.interm_data_size);

  const double map_slots = static_cast<double>(c.num_nodes * c.max_maps_per_node);
  job.map_waves = static_cast<double>(c.num_mappers) / map_slots;
  job.all_maps.io = static_cast<double>(c.num_mappers) * job.map_task.total.io / map_slots;
  job.all_maps.cpu = static_cast<double>(c.num_mappers) * job.map_task.total.cpu / map_slots;

  job.io_job = job.all_maps.io;
  job.cpu_job = job.all_maps.cpu;
  if (c.num_reducers > 0) {
    job.reduce_task = reduce_task_cost(in, job.map_task.interm_data_size,
                                       job.map_task.interm_data_pairs);
    const double reduce_slots = static_cast<double>(c.num_nodes * c.max_reduces_per_node);
    const double reducers = static_cast<double>(c.num_reducers);
    job.reduce_waves = reducers / reduce_slots;
    job.all_reducers.io = reducers * job.reduce_task->total.io / reduce_slots;
    job.all_reducers.cpu = reducers * job.reduce_task->total.cpu / reduce_slots;
    job.io_job += job.all_reducers.io;
    job.cpu_job += job.all_reducers.cpu;
  }
  job.net_job = job.network.cost.net;
  job.cost_job = job.io_job + job.cpu_job + job.net_job;
  return job;
}

SimulationResult simulate_job(const EffectiveInputs& in) {
  const auto& c = in.config();
  SimulationResult result;
  result.estimate = analytic_job_cost(in);
  result.estimate.method = EstimationMethod::kSimulated;
  const JobEstimate& job = result.estimate;
  SimTimeline& t = result.timeline;

  const double map_duration = job.map_task.total.io + job.map_task.total.cpu;
  auto maps = schedule(TaskKind::kMap, c.num_mappers, c.num_nodes * c.max_maps_per_node,
                       map_duration, 0.0);
  t.map_waves = wave_count(maps);

  double last_end = 0.0;
  for (const auto& e : maps) last_end = std::max(last_end, e.end_cost);

  std::vector<TaskEvent> reduces;
  if (c.num_reducers > 0) {
    std::vector<double> map_ends;
    map_ends.reserve(maps.size());
    for (const auto& e : maps) map_ends.push_back(e.end_cost);
    std::sort(map_ends.begin(), map_ends.end());
    const auto needed = std::clamp<std::int64_t>(
        detail::to_count(detail::ceil_snapped(c.reduce_slowstart *
                                              static_cast<double>(c.num_mappers))),
        0, c.num_mappers);
    t.reduce_release_cost = needed == 0 ? 0.0 : map_ends[static_cast<std::size_t>(needed - 1)];

    const double reduce_duration = job.reduce_task->total.io + job.reduce_task->total.cpu;
    reduces = schedule(TaskKind::kReduce, c.num_reducers, c.num_nodes * c.max_reduces_per_node,
                       reduce_duration, t.reduce_release_cost);
    t.reduce_waves = wave_count(reduces);
    for (const auto& e : reduces) last_end = std::max(last_end, e.end_cost);
  }

  t.events = std::move(maps);
  t.events.insert(t.events.end(), reduces.begin(), reduces.end());
  t.makespan_cost = last_end + job.net_job;
  return result;
}

std::string timeline_to_csv(const SimTimeline& timeline) {
  std::string out = "task_kind,task_index,wave,start_cost,end_cost\n";
  char line[160];
  for (const auto& e : timeline.events) {
    std::snprintf(line, sizeof line, "%s,%lld,%lld,%.17g,%.17g\n", to_string(e.kind).data(),
                  static_cast<long long>(e.task_index), static_cast<long long>(e.wave),
                  e.start_cost, e.end_cost);
    out += line;
  }
  return out;
}

}  // namespace mrperf
