#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mrperf/job_model.h"
#include "mrperf/params.h"

namespace mrperf {

struct WhatIfRow {
  HadoopConfig config;  // base with the override applied
  std::optional<JobEstimate> estimate;
  std::string error;    // set when estimate is absent
};

// One analytic estimate per override, in input order. An override that makes
// the inputs invalid yields a row with an error instead of an estimate.
std::vector<WhatIfRow> whatif(const JobInputs& base,
                              const std::vector<PartialHadoopConfig>& overrides);

struct SpaceDimension {
  HadoopParam param;
  std::vector<ParamValue> candidates;
};

// Dimensions in document order. Only parameters whose effect is "job" may be
// searched.
class ParameterSpace {
 public:
  // Throws std::invalid_argument for a non-job parameter, a repeated
  // parameter, or an empty candidate list.
  void add(HadoopParam param, std::vector<ParamValue> candidates);

  const std::vector<SpaceDimension>& dimensions() const { return dims_; }
  std::uint64_t size() const;

 private:
  std::vector<SpaceDimension> dims_;
};

// {"space": {"pSortFactor": [5, 10], ...}}, the bare inner object, or
// [{"name": "pSortFactor", "candidates": [5, 10]}, ...]. Throws SpecError.
ParameterSpace parse_parameter_space(std::string_view document);

struct GridPoint {
  std::vector<std::size_t> indices;  // candidate index per dimension
  HadoopConfig config;
  double cost_job = 0.0;
  double io_job = 0.0;
  double cpu_job = 0.0;
  double net_job = 0.0;
};

struct SkippedPoint {
  std::vector<std::size_t> indices;
  std::string reason;
};

struct SearchResult {
  HadoopConfig best;
  double best_cost = 0.0;
  std::vector<GridPoint> table;  // evaluated points, in evaluation order
  std::vector<SkippedPoint> skipped;
};

// Exhaustive grid search over the cartesian product, enumerated in
// lexicographic order of candidate indices (first dimension slowest). Ties go
// to the earliest point. Throws std::runtime_error when no point is valid.
SearchResult optimize(const JobInputs& base, const ParameterSpace& space);

// Delimited result table with a header row.
std::string search_table_csv(const ParameterSpace& space, const SearchResult& result);

}  // namespace mrperf
