#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "mrperf/job_model.h"

namespace mrperf::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,  // bad spec, validation failure, empty search grid
  kExitIo = 2,       // file could not be read or written
};

enum class Format { kTable, kMachine };

struct CommonOptions {
  std::filesystem::path spec;
  std::optional<std::filesystem::path> out;
  Format format = Format::kTable;
};

struct EstimateOptions {
  CommonOptions common;
  EstimationMethod method = EstimationMethod::kAnalytic;
  std::optional<std::filesystem::path> timeline;  // simulated method only
};

struct WhatIfOptions {
  CommonOptions common;
  std::filesystem::path overrides;
  std::optional<std::filesystem::path> csv;
};

struct OptimizeOptions {
  CommonOptions common;
  std::filesystem::path space;
  std::optional<std::filesystem::path> csv;
};

// Each command writes its report to `out` (and to --out when given) and
// diagnostics to `err`, and returns an ExitCode.
int cmd_estimate(const EstimateOptions& opts, std::ostream& out, std::ostream& err);
int cmd_whatif(const WhatIfOptions& opts, std::ostream& out, std::ostream& err);
int cmd_optimize(const OptimizeOptions& opts, std::ostream& out, std::ostream& err);

// Parses `estimate|simulate|whatif|optimize` and their flags, then dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mrperf::cli
