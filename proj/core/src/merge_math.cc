#include "mrperf/merge_math.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace mrperf {

namespace {

void check_domain(std::int64_t runs, std::int64_t fan_in) {
  if (runs < 1 || fan_in < 2) {
    throw std::invalid_argument("merge plan needs runs >= 1 and fan-in >= 2 (got runs=" +
                                std::to_string(runs) + ", fan-in=" + std::to_string(fan_in) + ")");
  }
}

void check_closed_form(std::int64_t runs, std::int64_t fan_in) {
  check_domain(runs, fan_in);
  if (!within_closed_form(runs, fan_in)) {
    throw std::invalid_argument("closed form needs runs <= fan-in^2; use simulate_merge_plan");
  }
}

}  // namespace

bool within_closed_form(std::int64_t runs, std::int64_t fan_in) {
  // ceil(runs / fan_in) <= fan_in, without forming fan_in^2.
  return (runs + fan_in - 1) / fan_in <= fan_in;
}

std::int64_t first_pass_spills(std::int64_t runs, std::int64_t fan_in) {
  check_domain(runs, fan_in);
  if (runs <= fan_in) return runs;
  const std::int64_t rem = (runs - 1) % (fan_in - 1);
  return rem == 0 ? fan_in : rem + 1;
}

std::int64_t interm_merge_spills(std::int64_t runs, std::int64_t fan_in) {
  check_closed_form(runs, fan_in);
  if (runs <= fan_in) return 0;
  const std::int64_t first = first_pass_spills(runs, fan_in);
  return first + (runs - first) / fan_in * fan_in;
}

std::int64_t final_merge_spills(std::int64_t runs, std::int64_t fan_in) {
  check_closed_form(runs, fan_in);
  if (runs <= fan_in) return runs;
  const std::int64_t first = first_pass_spills(runs, fan_in);
  const std::int64_t interm = interm_merge_spills(runs, fan_in);
  return 1 + (runs - first) / fan_in + (runs - interm);
}

std::int64_t merge_pass_count(std::int64_t runs, std::int64_t fan_in) {
  check_closed_form(runs, fan_in);
  if (runs == 1) return 0;
  if (runs <= fan_in) return 1;
  return 2 + (runs - first_pass_spills(runs, fan_in)) / fan_in;
}

MergePlan run_merge_policy(std::int64_t runs, std::int64_t fan_in) {
  check_domain(runs, fan_in);
  MergePlan plan{.runs = runs, .fan_in = fan_in};
  plan.first_pass_runs = first_pass_spills(runs, fan_in);

  // Original runs are always older than merged ones, so they are kept as a
  // count; each merged run records how many originals it holds.
  std::int64_t originals = runs;
  std::deque<std::int64_t> merged_runs;
  const auto live = [&] { return originals + static_cast<std::int64_t>(merged_runs.size()); };

  std::int64_t take = plan.first_pass_runs;
  while (live() > fan_in) {
    const std::int64_t from_originals = std::min(take, originals);
    originals -= from_originals;
    std::int64_t volume = from_originals;
    for (std::int64_t i = from_originals; i < take; ++i) {
      volume += merged_runs.front();
      merged_runs.pop_front();
    }
    plan.interm_reads += take;
    plan.interm_run_volume += volume;
    plan.pass_count += 1;
    merged_runs.push_back(volume);
    take = fan_in;
  }
  plan.final_merge_inputs = live();
  if (runs > 1) plan.pass_count += 1;
  return plan;
}

MergePlan simulate_merge_plan(std::int64_t runs, std::int64_t fan_in) {
  check_domain(runs, fan_in);
  if (!within_closed_form(runs, fan_in)) return run_merge_policy(runs, fan_in);
  const std::int64_t interm = interm_merge_spills(runs, fan_in);
  return MergePlan{
      .runs = runs,
      .fan_in = fan_in,
      .first_pass_runs = first_pass_spills(runs, fan_in),
      .interm_reads = interm,
      .interm_run_volume = interm,
      .final_merge_inputs = final_merge_spills(runs, fan_in),
      .pass_count = merge_pass_count(runs, fan_in),
  };
}

}  // namespace mrperf
