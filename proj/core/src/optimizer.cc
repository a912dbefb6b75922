#include "mrperf/optimizer.h"

#include <cstdio>
#include <stdexcept>

#include "json_util.h"
#include "mrperf/errors.h"

namespace mrperf {

namespace {

struct Evaluation {
  HadoopConfig config;
  std::optional<JobEstimate> estimate;
  std::string error;
};

Evaluation evaluate(const JobInputs& base, const PartialHadoopConfig& overrides) {
  Evaluation out;
  out.config = base.config;
  try {
    out.config = apply_overrides(base.config, overrides);
    const auto violations = validate(out.config, base.profile, base.costs);
    if (!violations.empty()) {
      out.error = format_violations(violations);
      return out;
    }
    out.estimate = analytic_job_cost(normalize(out.config, base.profile, base.costs));
  } catch (const std::invalid_argument& e) {
    out.error = e.what();
  } catch (const ModelError& e) {
    out.error = e.what();
  }
  return out;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<WhatIfRow> whatif(const JobInputs& base,
                              const std::vector<PartialHadoopConfig>& overrides) {
  std::vector<WhatIfRow> rows;
  rows.reserve(overrides.size());
  for (const auto& ov : overrides) {
    Evaluation e = evaluate(base, ov);
    rows.push_back({std::move(e.config), std::move(e.estimate), std::move(e.error)});
  }
  return rows;
}

void ParameterSpace::add(HadoopParam param, std::vector<ParamValue> candidates) {
  const HadoopParamInfo& info = param_info(param);
  if (info.effect != ParamEffect::kJob) {
    throw std::invalid_argument(std::string(info.name) +
                                " is not a job-level parameter and cannot be searched");
  }
  for (const auto& d : dims_) {
    if (d.param == param) throw std::invalid_argument(std::string(info.name) + " listed twice");
  }
  if (candidates.empty()) {
    throw std::invalid_argument(std::string(info.name) + " has no candidate values");
  }
  dims_.push_back({param, std::move(candidates)});
}

std::uint64_t ParameterSpace::size() const {
  if (dims_.empty()) return 0;
  std::uint64_t n = 1;
  for (const auto& d : dims_) n *= d.candidates.size();
  return n;
}

ParameterSpace parse_parameter_space(std::string_view document) {
  using detail::Json;
  Json doc = detail::parse_document(document);
  if (doc.is_object() && doc.contains("space")) doc = doc.at("space");

  std::vector<std::pair<std::string, Json>> entries;
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) entries.emplace_back(key, value);
  } else if (doc.is_array()) {
    for (const auto& item : doc) {
      if (!item.is_object() || !item.contains("name") || !item.at("name").is_string() ||
          !item.contains("candidates")) {
        throw SpecError("space entries need a string 'name' and a 'candidates' array");
      }
      entries.emplace_back(item.at("name").get<std::string>(), item.at("candidates"));
    }
  } else {
    throw SpecError("search space must be an object or an array");
  }

  ParameterSpace space;
  for (const auto& [name, candidates] : entries) {
    const HadoopParamInfo* info = find_hadoop_param(name);
    if (info == nullptr) throw SpecError("unknown field name '" + name + "'");
    if (!candidates.is_array()) throw SpecError("candidates for '" + name + "' must be an array");
    std::vector<ParamValue> values;
    for (const auto& v : candidates) values.push_back(detail::to_param_value(*info, v));
    try {
      space.add(info->id, std::move(values));
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what());
    }
  }
  if (space.dimensions().empty()) throw SpecError("search space is empty");
  return space;
}

SearchResult optimize(const JobInputs& base, const ParameterSpace& space) {
  const auto& dims = space.dimensions();
  SearchResult result;
  if (dims.empty()) throw EmptyGridError("search space has no dimensions");

  std::vector<std::size_t> idx(dims.size(), 0);
  std::optional<std::size_t> best;
  for (bool more = true; more;) {
    PartialHadoopConfig point;
    for (std::size_t d = 0; d < dims.size(); ++d) {
      point.set(dims[d].param, dims[d].candidates[idx[d]]);
    }
    Evaluation e = evaluate(base, point);
    if (e.estimate) {
      const JobEstimate& est = *e.estimate;
      result.table.push_back({idx, e.config, est.cost_job, est.io_job, est.cpu_job, est.net_job});
      if (!best || est.cost_job < result.table[*best].cost_job) best = result.table.size() - 1;
    } else {
      result.skipped.push_back({idx, e.error});
    }

    // Odometer step, last dimension fastest.
    more = false;
    for (std::size_t d = dims.size(); d-- > 0;) {
      if (++idx[d] < dims[d].candidates.size()) {
        more = true;
        break;
      }
      idx[d] = 0;
    }
  }

  if (!best) throw EmptyGridError("no valid point in the search space");
  result.best = result.table[*best].config;
  result.best_cost = result.table[*best].cost_job;
  return result;
}

std::string search_table_csv(const ParameterSpace& space, const SearchResult& result) {
  std::string out;
  for (const auto& d : space.dimensions()) {
    out += param_info(d.param).name;
    out += ',';
  }
  out += "costJob,ioJob,cpuJob,netJob\n";
  for (const auto& row : result.table) {
    for (const auto& d : space.dimensions()) {
      out += to_string(get_param(row.config, d.param));
      out += ',';
    }
    out += format_number(row.cost_job) + ',' + format_number(row.io_job) + ',' +
           format_number(row.cpu_job) + ',' + format_number(row.net_job) + '\n';
  }
  return out;
}

}  // namespace mrperf
