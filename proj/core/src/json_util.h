#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mrperf/errors.h"
#include "mrperf/job_spec.h"
#include "mrperf/params.h"

namespace mrperf::detail {

using Json = nlohmann::ordered_json;

inline Json parse_document(std::string_view document) {
  try {
    return Json::parse(document.begin(), document.end());
  } catch (const Json::parse_error& e) {
    throw SpecError(std::string("malformed document: ") + e.what());
  }
}

inline double require_number(const Json& value, std::string_view field) {
  if (!value.is_number()) {
    throw SpecError("non-numeric value for '" + std::string(field) + "'");
  }
  return value.get<double>();
}

inline ParamValue to_param_value(const HadoopParamInfo& info, const Json& value) {
  const std::string name(info.name);
  switch (info.kind) {
    case ParamKind::kBoolean:
      if (!value.is_boolean()) throw SpecError("expected true/false for '" + name + "'");
      return value.get<bool>();
    case ParamKind::kMemory:
      if (value.is_string()) {
        try {
          return parse_memory_size(value.get<std::string>());
        } catch (const SpecError& e) {
          throw SpecError(name + ": " + e.what());
        }
      }
      return require_number(value, name);
    case ParamKind::kInteger:
      if (value.is_number_integer()) return value.get<std::int64_t>();
      if (value.is_number_float()) {
        const double d = value.get<double>();
        if (std::trunc(d) != d) throw SpecError("expected an integer for '" + name + "'");
        return d;
      }
      throw SpecError("non-numeric value for '" + name + "'");
    case ParamKind::kReal:
      return require_number(value, name);
  }
  throw SpecError("unhandled parameter kind for '" + name + "'");
}

}  // namespace mrperf::detail
