#include "cli/commands.h"

#include <ostream>

#include "CLI11.hpp"
#include "cli/report.h"
#include "mrperf/errors.h"
#include "mrperf/job_spec.h"
#include "mrperf/optimizer.h"

namespace mrperf::cli {

namespace {

struct LoadedBase {
  JobInputs inputs;
  ReportMeta meta;
};

// Reads and validates the job spec; throws on any failure.
LoadedBase load_base(const CommonOptions& common, std::string method) {
  LoadedJobSpec spec = load_job_spec(common.spec);
  auto violations = validate(spec.inputs);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  LoadedBase base{spec.inputs, {common.spec.string(), std::move(method)}};
  if (spec.units) {
    base.meta.units = *spec.units;
    base.meta.units_declared = true;
  }
  return base;
}

void emit(const CommonOptions& common, const std::string& text, std::ostream& out) {
  out << text;
  if (common.out) write_text_file(*common.out, text);
}

std::string machine_text(const JobInputs& inputs, const ReportMeta& meta, Json results) {
  Json doc = spec_document(inputs, meta);
  doc["results"] = std::move(results);
  return doc.dump(2) + "\n";
}

// Runs `body`, mapping exceptions to exit codes and diagnostics.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "error: invalid job spec\n";
    for (const auto& v : e.violations()) err << "  " << v.field << ": " << v.constraint << "\n";
    return kExitInvalid;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const EmptyGridError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace

int cmd_estimate(const EstimateOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    LoadedBase base = load_base(opts.common, std::string(to_string(opts.method)));
    const EffectiveInputs in = normalize(base.inputs);

    std::optional<SimulationResult> sim;
    JobEstimate job;
    if (opts.method == EstimationMethod::kSimulated) {
      sim = simulate_job(in);
      job = sim->estimate;
      if (opts.timeline) write_text_file(*opts.timeline, timeline_to_csv(sim->timeline));
    } else {
      job = analytic_job_cost(in);
    }
    const SimTimeline* timeline = sim ? &sim->timeline : nullptr;

    const std::string text =
        opts.common.format == Format::kMachine
            ? machine_text(base.inputs, base.meta, estimate_results(job, timeline))
            : estimate_table(job, timeline, base.meta);
    emit(opts.common, text, out);
    return static_cast<int>(kExitOk);
  });
}

int cmd_whatif(const WhatIfOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    LoadedBase base = load_base(opts.common, "analytic");
    const auto overrides = parse_overrides(read_text_file(opts.overrides));
    const auto rows = whatif(base.inputs, overrides);

    const std::string text =
        opts.common.format == Format::kMachine
            ? machine_text(base.inputs, base.meta, whatif_results(rows))
            : whatif_table(rows, base.meta);
    emit(opts.common, text, out);
    if (opts.csv) write_text_file(*opts.csv, whatif_csv(rows));

    bool any_ok = rows.empty();
    for (const auto& r : rows) {
      if (r.estimate) {
        any_ok = true;
      } else {
        err << "warning: override " << (&r - rows.data()) << ": " << r.error << "\n";
      }
    }
    return static_cast<int>(any_ok ? kExitOk : kExitInvalid);
  });
}

int cmd_optimize(const OptimizeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    LoadedBase base = load_base(opts.common, "analytic");
    const ParameterSpace space = parse_parameter_space(read_text_file(opts.space));
    const SearchResult result = optimize(base.inputs, space);

    const std::string text =
        opts.common.format == Format::kMachine
            ? machine_text(base.inputs, base.meta, search_results(space, result))
            : search_table(space, result, base.meta);
    emit(opts.common, text, out);
    if (opts.csv) write_text_file(*opts.csv, search_table_csv(space, result));
    return static_cast<int>(kExitOk);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cost estimation for Hadoop MapReduce jobs", "mrperf"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string format = "table";
  std::string method = "analytic";
  std::string spec, out_path, timeline, overrides, space, csv;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec, "Job spec (JSON)")->required();
    cmd->add_option("--out", out_path, "Also write the report to this file");
    cmd->add_option("--format", format, "table or machine")
        ->check(CLI::IsMember({"table", "machine"}));
  };

  CLI::App* estimate = app.add_subcommand("estimate", "Per-phase and job cost breakdown");
  add_common(estimate);
  estimate->add_option("--method", method, "analytic or simulated")
      ->check(CLI::IsMember({"analytic", "simulated"}));
  estimate->add_option("--timeline", timeline, "Write the simulated task timeline (CSV)");

  CLI::App* simulate = app.add_subcommand("simulate", "Estimate with the task scheduler simulator");
  add_common(simulate);
  simulate->add_option("--timeline", timeline, "Write the task timeline (CSV)");

  CLI::App* whatif_cmd = app.add_subcommand("whatif", "Evaluate configuration overrides");
  add_common(whatif_cmd);
  whatif_cmd->add_option("--overrides", overrides, "Overrides document (JSON)")->required();
  whatif_cmd->add_option("--csv", csv, "Write the result table as CSV");

  CLI::App* optimize_cmd = app.add_subcommand("optimize", "Grid search for the cheapest configuration");
  add_common(optimize_cmd);
  optimize_cmd->add_option("--space", space, "Search-space document (JSON)")->required();
  optimize_cmd->add_option("--csv", csv, "Write the result table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
  }

  common.spec = spec;
  if (!out_path.empty()) common.out = out_path;
  common.format = format == "machine" ? Format::kMachine : Format::kTable;
  const auto optional_path = [](const std::string& s) -> std::optional<std::filesystem::path> {
    if (s.empty()) return std::nullopt;
    return s;
  };

  if (estimate->parsed() || simulate->parsed()) {
    EstimateOptions opts{common,
                         simulate->parsed() || method == "simulated"
                             ? EstimationMethod::kSimulated
                             : EstimationMethod::kAnalytic,
                         optional_path(timeline)};
    return cmd_estimate(opts, out, err);
  }
  if (whatif_cmd->parsed()) {
    return cmd_whatif({common, overrides, optional_path(csv)}, out, err);
  }
  return cmd_optimize({common, space, optional_path(csv)}, out, err);
}

}  // namespace mrperf::cli
