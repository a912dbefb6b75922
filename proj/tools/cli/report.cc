#include "cli/report.h"

#include <fmt/format.h>

#include "mrperf/version.h"

namespace mrperf::cli {

namespace {

Json cost_json(const CostVector& c) {
  return Json{{"io", c.io}, {"cpu", c.cpu}, {"net", c.net}, {"total", c.total()}};
}

std::string sig6(double v) { return fmt::format("{:.6g}", v); }

void append_cost_rows(std::string& out, const std::string& title,
                      const std::vector<std::pair<std::string, CostVector>>& rows,
                      const CostVector& total) {
  out += fmt::format("\n{}\n", title);
  out += fmt::format("  {:<12} {:>14} {:>14} {:>14} {:>14}\n", "phase", "io", "cpu", "net",
                     "total");
  for (const auto& [name, c] : rows) {
    out += fmt::format("  {:<12} {:>14} {:>14} {:>14} {:>14}\n", name, sig6(c.io), sig6(c.cpu),
                       sig6(c.net), sig6(c.total()));
  }
  out += fmt::format("  {:<12} {:>14} {:>14} {:>14} {:>14}\n", "TOTAL", sig6(total.io),
                     sig6(total.cpu), sig6(total.net), sig6(total.total()));
}

void append_values(std::string& out, const std::string& title,
                   const std::vector<std::pair<std::string, double>>& rows) {
  out += fmt::format("\n{}\n", title);
  for (const auto& [name, v] : rows) out += fmt::format("  {:<24} {:>16}\n", name, sig6(v));
}

std::string header(const std::string& what, const ReportMeta& meta) {
  return fmt::format("mrperf {} | {} | spec: {} | method: {} | units: {}\n", kVersion, what,
                     meta.spec_path, meta.method, meta.units);
}

constexpr const char* kFooter =
    "\nNumbers shown to 6 significant digits; totals are summed at full precision.\n";

}  // namespace

Json spec_document(const JobInputs& inputs, const ReportMeta& meta) {
  Json doc;
  Json hadoop = Json::object();
  for (const auto& info : hadoop_params()) {
    std::visit([&](auto v) { hadoop[std::string(info.name)] = v; },
               get_param(inputs.config, info.id));
  }
  Json profile = Json::object();
  for (const auto& f : profile_fields()) profile[std::string(f.name)] = inputs.profile.*(f.member);
  Json costs = Json::object();
  for (const auto& f : cost_fields()) costs[std::string(f.name)] = inputs.costs.*(f.member);
  doc["hadoop"] = std::move(hadoop);
  doc["profile"] = std::move(profile);
  doc["costs"] = std::move(costs);
  if (meta.units_declared) doc["units"] = meta.units;
  doc["metadata"] = {{"spec", meta.spec_path}, {"method", meta.method}, {"tool_version", std::string(kVersion)}};
  return doc;
}

Json estimate_results(const JobEstimate& job, const SimTimeline* timeline) {
  Json r;
  r["method"] = std::string(to_string(job.method));

  const MapTaskEstimate& m = job.map_task;
  Json map;
  map["dataflow"] = {{"inputMapSize", m.dataflow.input_map_size},
                     {"inputMapPairs", m.dataflow.input_map_pairs},
                     {"outMapSize", m.dataflow.out_map_size},
                     {"outMapPairs", m.dataflow.out_map_pairs},
                     {"outPairWidth", m.dataflow.out_pair_width}};
  if (m.spill) {
    const SpillSpec& s = *m.spill;
    map["spill"] = {{"maxSerPairs", s.max_ser_pairs},
                    {"maxAccPairs", s.max_acc_pairs},
                    {"spillBufferPairs", s.spill_buffer_pairs},
                    {"spillBufferSize", s.spill_buffer_size},
                    {"numSpills", s.num_spills},
                    {"spillFileSize", s.spill_file_size},
                    {"spillFilePairs", s.spill_file_pairs}};
  }
  if (m.merge_plan) {
    const MergePlan& p = *m.merge_plan;
    map["mergePlan"] = {{"firstPassCount", p.first_pass_runs},
                        {"intermReads", p.interm_reads},
                        {"intermRunVolume", p.interm_run_volume},
                        {"finalMergeInputs", p.final_merge_inputs},
                        {"passCount", p.pass_count}};
  }
  map["useCombInMerge"] = m.combine_in_merge;
  map["intermDataSize"] = m.interm_data_size;
  map["intermDataPairs"] = m.interm_data_pairs;
  map["numRecSpilled"] = m.num_rec_spilled;
  Json map_phases;
  for (MapPhase p : kMapPhases) map_phases[std::string(to_string(p))] = cost_json(m.phase(p));
  map["phases"] = std::move(map_phases);
  map["total"] = cost_json(m.total);
  r["mapTask"] = std::move(map);

  if (job.reduce_task) {
    const ReduceTaskEstimate& t = *job.reduce_task;
    const ShuffleOutcome& sh = t.shuffle;
    const SortOutcome& so = t.sort;
    Json red;
    red["segment"] = {{"segmentComprSize", t.segment.compr_size},
                      {"segmentUncomprSize", t.segment.uncompr_size},
                      {"segmentPairs", t.segment.pairs}};
    red["shuffle"] = {{"totalShuffleSize", sh.total_shuffle_size},
                      {"totalShufflePairs", sh.total_shuffle_pairs},
                      {"shuffleBufferSize", sh.shuffle_buffer_size},
                      {"mergeSizeThr", sh.merge_size_threshold},
                      {"caseTwo", sh.case_two},
                      {"numSegInShuffleFile", sh.num_seg_in_shuffle_file},
                      {"shuffleFileSize", sh.shuffle_file_size},
                      {"shuffleFilePairs", sh.shuffle_file_pairs},
                      {"numShuffleFiles", sh.num_shuffle_files},
                      {"numSegmentsInMem", sh.num_segments_in_mem},
                      {"numShuffleMerges", sh.num_shuffle_merges},
                      {"numMergShufFiles", sh.num_merged_files},
                      {"mergShufFileSize", sh.merged_file_size},
                      {"mergShufFilePairs", sh.merged_file_pairs},
                      {"numUnmergShufFiles", sh.num_unmerged_files},
                      {"unmergShufFileSize", sh.unmerged_file_size},
                      {"unmergShufFilePairs", sh.unmerged_file_pairs}};
    red["sort"] = {{"maxSegmentBuffer", so.max_segment_buffer},
                   {"currSegmentBuffer", so.curr_segment_buffer},
                   {"numSegmentsEvicted", so.num_segments_evicted},
                   {"numSegmentsRemainMem", so.num_segments_remain_mem},
                   {"numFilesOnDisk", so.num_files_on_disk},
                   {"numFilesFromMem", so.num_files_from_mem},
                   {"filesFromMemSize", so.files_from_mem_size},
                   {"filesFromMemPairs", so.files_from_mem_pairs},
                   {"step1MergingSize", so.step1_merging_size},
                   {"filesToMergeStep2", so.files_to_merge_step2},
                   {"step2MergingSize", so.step2_merging_size},
                   {"filesRemainFromStep2", so.files_remain_from_step2},
                   {"filesToMergeStep3", so.files_to_merge_step3},
                   {"step3MergingSize", so.step3_merging_size},
                   {"filesRemainFromStep3", so.files_remain_from_step3},
                   {"totalMergingSize", so.total_merging_size},
                   {"totalMergingPairs", so.total_merging_pairs}};
    red["write"] = {{"inReduceSize", t.write.in_reduce_size},
                    {"inReducePairs", t.write.in_reduce_pairs},
                    {"outReduceSize", t.write.out_reduce_size},
                    {"outReducePairs", t.write.out_reduce_pairs},
                    {"inRedSizeDiskSize", t.write.in_reduce_disk_size}};
    Json phases;
    for (ReducePhase p : kReducePhases) phases[std::string(to_string(p))] = cost_json(t.phase(p));
    red["phases"] = std::move(phases);
    red["total"] = cost_json(t.total);
    r["reduceTask"] = std::move(red);
    r["network"] = {{"netTransferSize", job.network.net_transfer_size},
                    {"cost", cost_json(job.network.cost)}};
  }

  r["job"] = {{"mapWaves", job.map_waves},
              {"reduceWaves", job.reduce_waves},
              {"ioAllMaps", job.all_maps.io},
              {"cpuAllMaps", job.all_maps.cpu},
              {"ioAllReducers", job.all_reducers.io},
              {"cpuAllReducers", job.all_reducers.cpu},
              {"ioJob", job.io_job},
              {"cpuJob", job.cpu_job},
              {"netJob", job.net_job},
              {"costJob", job.cost_job}};
  if (timeline != nullptr) {
    r["simulation"] = {{"mapWaves", timeline->map_waves},
                       {"reduceWaves", timeline->reduce_waves},
                       {"reduceReleaseCost", timeline->reduce_release_cost},
                       {"makespanCost", timeline->makespan_cost}};
  }
  return r;
}

Json whatif_results(const std::vector<WhatIfRow>& rows) {
  Json list = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const WhatIfRow& row = rows[i];
    Json j{{"row", i}};
    if (row.estimate) {
      j["status"] = "ok";
      j["costJob"] = row.estimate->cost_job;
      j["ioJob"] = row.estimate->io_job;
      j["cpuJob"] = row.estimate->cpu_job;
      j["netJob"] = row.estimate->net_job;
    } else {
      j["status"] = "error";
      j["error"] = row.error;
    }
    list.push_back(std::move(j));
  }
  return Json{{"method", "analytic"}, {"whatif", std::move(list)}};
}

Json search_results(const ParameterSpace& space, const SearchResult& result) {
  const auto point_params = [&](const HadoopConfig& config) {
    Json p = Json::object();
    for (const auto& d : space.dimensions()) {
      std::visit([&](auto v) { p[std::string(param_info(d.param).name)] = v; },
                 get_param(config, d.param));
    }
    return p;
  };
  Json table = Json::array();
  for (const auto& row : result.table) {
    table.push_back({{"params", point_params(row.config)},
                     {"costJob", row.cost_job},
                     {"ioJob", row.io_job},
                     {"cpuJob", row.cpu_job},
                     {"netJob", row.net_job}});
  }
  Json skipped = Json::array();
  for (const auto& s : result.skipped) {
    skipped.push_back({{"indices", s.indices}, {"reason", s.reason}});
  }
  return Json{{"method", "analytic"},
              {"best", point_params(result.best)},
              {"bestCost", result.best_cost},
              {"table", std::move(table)},
              {"skipped", std::move(skipped)}};
}

std::string estimate_table(const JobEstimate& job, const SimTimeline* timeline,
                           const ReportMeta& meta) {
  std::string out = header("estimate", meta);
  const MapTaskEstimate& m = job.map_task;

  std::vector<std::pair<std::string, double>> flow = {
      {"inputMapSize", m.dataflow.input_map_size},
      {"inputMapPairs", m.dataflow.input_map_pairs},
      {"outMapSize", m.dataflow.out_map_size},
      {"outMapPairs", m.dataflow.out_map_pairs}};
  if (m.spill) {
    flow.insert(flow.end(), {{"spillBufferPairs", m.spill->spill_buffer_pairs},
                             {"numSpills", static_cast<double>(m.spill->num_spills)},
                             {"spillFileSize", m.spill->spill_file_size}});
  }
  if (m.merge_plan) {
    flow.insert(flow.end(), {{"mergePasses", static_cast<double>(m.merge_plan->pass_count)}});
  }
  if (job.reduce_task) {
    flow.insert(flow.end(), {{"intermDataSize", m.interm_data_size},
                             {"intermDataPairs", m.interm_data_pairs}});
  }
  append_values(out, "Map task dataflow (bytes, pairs)", flow);

  std::vector<std::pair<std::string, CostVector>> map_rows;
  for (MapPhase p : kMapPhases) map_rows.emplace_back(std::string(to_string(p)), m.phase(p));
  append_cost_rows(out, "Map task costs", map_rows, m.total);

  if (job.reduce_task) {
    const ReduceTaskEstimate& t = *job.reduce_task;
    append_values(out, "Reduce task dataflow (bytes, pairs)",
                  {{"segmentComprSize", t.segment.compr_size},
                   {"totalShuffleSize", t.shuffle.total_shuffle_size},
                   {"numSegInShuffleFile", static_cast<double>(t.shuffle.num_seg_in_shuffle_file)},
                   {"numShuffleFiles", static_cast<double>(t.shuffle.num_shuffle_files)},
                   {"numSegmentsInMem", static_cast<double>(t.shuffle.num_segments_in_mem)},
                   {"numShuffleMerges", static_cast<double>(t.shuffle.num_shuffle_merges)},
                   {"totalMergingSize", t.sort.total_merging_size},
                   {"inReduceSize", t.write.in_reduce_size},
                   {"inReducePairs", t.write.in_reduce_pairs},
                   {"outReduceSize", t.write.out_reduce_size}});
    std::vector<std::pair<std::string, CostVector>> rows;
    for (ReducePhase p : kReducePhases) rows.emplace_back(std::string(to_string(p)), t.phase(p));
    append_cost_rows(out, "Reduce task costs", rows, t.total);

    append_values(out, "Network", {{"netTransferSize", job.network.net_transfer_size},
                                   {"netCost", job.network.cost.net}});
  }

  std::vector<std::pair<std::string, CostVector>> job_rows = {
      {"AllMaps", job.all_maps}};
  if (job.reduce_task) {
    job_rows.emplace_back("AllReducers", job.all_reducers);
    job_rows.emplace_back("Network", job.network.cost);
  }
  append_cost_rows(out, "Job totals", job_rows, {job.io_job, job.cpu_job, job.net_job});
  out += fmt::format("  {:<12} {:>14}\n", "Cost_Job", sig6(job.cost_job));

  if (timeline != nullptr) {
    append_values(out, "Simulation",
                  {{"mapWaves", static_cast<double>(timeline->map_waves)},
                   {"reduceWaves", static_cast<double>(timeline->reduce_waves)},
                   {"reduceReleaseCost", timeline->reduce_release_cost},
                   {"makespanCost", timeline->makespan_cost}});
  }
  out += kFooter;
  return out;
}

std::string whatif_table(const std::vector<WhatIfRow>& rows, const ReportMeta& meta) {
  std::string out = header("what-if", meta);
  out += fmt::format("\n  {:>4} {:>14} {:>14} {:>14} {:>14}  {}\n", "row", "costJob", "ioJob",
                     "cpuJob", "netJob", "status");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.estimate) {
      out += fmt::format("  {:>4} {:>14} {:>14} {:>14} {:>14}  ok\n", i,
                         sig6(r.estimate->cost_job), sig6(r.estimate->io_job),
                         sig6(r.estimate->cpu_job), sig6(r.estimate->net_job));
    } else {
      out += fmt::format("  {:>4} {:>14} {:>14} {:>14} {:>14}  error: {}\n", i, "-", "-", "-",
                         "-", r.error);
    }
  }
  out += kFooter;
  return out;
}

std::string whatif_csv(const std::vector<WhatIfRow>& rows) {
  std::string out = "row,status,costJob,ioJob,cpuJob,netJob,error\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.estimate) {
      out += fmt::format("{},ok,{},{},{},{},\n", i, r.estimate->cost_job, r.estimate->io_job,
                         r.estimate->cpu_job, r.estimate->net_job);
    } else {
      std::string msg = r.error;
      for (char& ch : msg) {
        if (ch == ',' || ch == '\n') ch = ' ';
      }
      out += fmt::format("{},error,,,,,{}\n", i, msg);
    }
  }
  return out;
}

std::string search_table(const ParameterSpace& space, const SearchResult& result,
                         const ReportMeta& meta) {
  std::string out = header("optimize", meta);
  out += "\nBest configuration:";
  for (const auto& d : space.dimensions()) {
    out += fmt::format(" {}={}", param_info(d.param).name,
                       to_string(get_param(result.best, d.param)));
  }
  out += fmt::format("\nBest Cost_Job: {}\n\n", sig6(result.best_cost));

  out += "  ";
  for (const auto& d : space.dimensions()) {
    out += fmt::format("{:>20} ", param_info(d.param).name);
  }
  out += fmt::format("{:>14} {:>14} {:>14} {:>14}\n", "costJob", "ioJob", "cpuJob", "netJob");
  for (const auto& row : result.table) {
    out += "  ";
    for (const auto& d : space.dimensions()) {
      out += fmt::format("{:>20} ", to_string(get_param(row.config, d.param)));
    }
    out += fmt::format("{:>14} {:>14} {:>14} {:>14}\n", sig6(row.cost_job), sig6(row.io_job),
                       sig6(row.cpu_job), sig6(row.net_job));
  }
  if (!result.skipped.empty()) {
    out += fmt::format("\nSkipped {} invalid point(s):\n", result.skipped.size());
    for (const auto& s : result.skipped) out += fmt::format("  {}\n", s.reason);
  }
  out += kFooter;
  return out;
}

}  // namespace mrperf::cli
