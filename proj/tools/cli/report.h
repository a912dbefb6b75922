#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "mrperf/job_model.h"
#include "mrperf/optimizer.h"
#include "mrperf/params.h"

namespace mrperf::cli {

using Json = nlohmann::ordered_json;

struct ReportMeta {
  std::string spec_path;
  std::string method;
  std::string units = "cost units";
  bool units_declared = false;
};

// Job spec document (hadoop/profile/costs, and units when declared) plus a
// metadata block; callers attach a "results" section.
Json spec_document(const JobInputs& inputs, const ReportMeta& meta);

Json estimate_results(const JobEstimate& job, const SimTimeline* timeline);
Json whatif_results(const std::vector<WhatIfRow>& rows);
Json search_results(const ParameterSpace& space, const SearchResult& result);

std::string estimate_table(const JobEstimate& job, const SimTimeline* timeline,
                           const ReportMeta& meta);
std::string whatif_table(const std::vector<WhatIfRow>& rows, const ReportMeta& meta);
std::string whatif_csv(const std::vector<WhatIfRow>& rows);
std::string search_table(const ParameterSpace& space, const SearchResult& result,
                         const ReportMeta& meta);

}  // namespace mrperf::cli
