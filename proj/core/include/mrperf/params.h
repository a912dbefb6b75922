#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mrperf {

// Hadoop configuration parameters that shape a job's execution. Field names
// follow the role of the parameter; the job-spec file uses the p-prefixed
// names listed by hadoop_params().
struct HadoopConfig {
  // Cluster
  std::int64_t num_nodes = 0;
  double task_mem = 0.0;  // bytes
  std::int64_t max_maps_per_node = 0;
  std::int64_t max_reduces_per_node = 0;

  // Map side
  std::int64_t num_mappers = 0;
  double sort_mb = 0.0;  // MB, converted with 2^20 where used
  double spill_percent = 0.0;
  double sort_record_percent = 0.0;
  std::int64_t sort_factor = 0;
  std::int64_t num_spills_for_combine = 0;

  // Reduce side
  std::int64_t num_reducers = 0;
  std::int64_t in_mem_merge_threshold = 0;
  double shuffle_input_buffer_percent = 0.0;
  double shuffle_merge_percent = 0.0;
  double reducer_input_buffer_percent = 0.0;

  bool use_combine = false;
  bool is_interm_compressed = false;
  bool is_out_compressed = false;

  double reduce_slowstart = 0.0;

  // Input
  bool is_in_compressed = false;
  double split_size = 0.0;  // bytes

  friend bool operator==(const HadoopConfig&, const HadoopConfig&) = default;
};

// Statistics of the input data and the user-defined functions.
struct DataProfile {
  double input_pair_width = 0.0;  // bytes per pair
  double map_size_sel = 1.0;
  double map_pairs_sel = 1.0;
  double reduce_size_sel = 1.0;
  double reduce_pairs_sel = 1.0;
  double combine_size_sel = 1.0;
  double combine_pairs_sel = 1.0;
  double input_compress_ratio = 1.0;
  double interm_compress_ratio = 1.0;
  double out_compress_ratio = 1.0;

  friend bool operator==(const DataProfile&, const DataProfile&) = default;
};

// Unit costs. I/O, network and (de)compression factors are per byte; the
// remaining CPU factors are per key-value pair.
struct CostFactors {
  double hdfs_read = 0.0;
  double hdfs_write = 0.0;
  double local_io = 0.0;
  double network = 0.0;

  double map_cpu = 0.0;
  double reduce_cpu = 0.0;
  double combine_cpu = 0.0;

  double partition_cpu = 0.0;
  double serde_cpu = 0.0;
  double sort_cpu = 0.0;
  double merge_cpu = 0.0;

  double in_uncompress_cpu = 0.0;
  double interm_uncompress_cpu = 0.0;
  double interm_compress_cpu = 0.0;
  double out_compress_cpu = 0.0;

  CostFactors scaled(double k) const;

  friend bool operator==(const CostFactors&, const CostFactors&) = default;
};

// Raw (validated but not normalized) model inputs.
struct JobInputs {
  HadoopConfig config;
  DataProfile profile;
  CostFactors costs;
};

// Inputs after the disabled-feature initializations have been applied:
// a disabled combiner or compression stage has selectivity/ratio 1 and zero
// CPU cost. Only normalize() produces these.
class EffectiveInputs {
 public:
  const HadoopConfig& config() const { return config_; }
  const DataProfile& profile() const { return profile_; }
  const CostFactors& costs() const { return costs_; }

  JobInputs to_job_inputs() const { return {config_, profile_, costs_}; }

 private:
  friend EffectiveInputs normalize(const HadoopConfig&, const DataProfile&,
                                   const CostFactors&);
  EffectiveInputs(HadoopConfig c, DataProfile p, CostFactors k)
      : config_(std::move(c)), profile_(std::move(p)), costs_(std::move(k)) {}

  HadoopConfig config_;
  DataProfile profile_;
  CostFactors costs_;
};

EffectiveInputs normalize(const HadoopConfig& config, const DataProfile& profile,
                          const CostFactors& costs);
inline EffectiveInputs normalize(const JobInputs& in) {
  return normalize(in.config, in.profile, in.costs);
}

// ---------------------------------------------------------------------------
// Parameter metadata

enum class HadoopParam {
  kNumNodes,
  kTaskMem,
  kMaxMapsPerNode,
  kMaxRedPerNode,
  kNumMappers,
  kSortMB,
  kSpillPerc,
  kSortRecPerc,
  kSortFactor,
  kNumSpillsForComb,
  kNumReducers,
  kInMemMergeThr,
  kShuffleInBufPerc,
  kShuffleMergePerc,
  kReducerInBufPerc,
  kUseCombine,
  kIsIntermCompressed,
  kIsOutCompressed,
  kReduceSlowstart,
  kIsInCompressed,
  kSplitSize,
};

enum class ParamKind { kInteger, kReal, kBoolean, kMemory };
enum class ParamEffect { kSystem, kJob, kInput };

using ParamValue = std::variant<std::int64_t, double, bool>;

struct HadoopParamInfo {
  HadoopParam id;
  std::string_view name;        // job-spec field name, e.g. "pSortFactor"
  std::string_view hadoop_key;  // e.g. "io.sort.factor"
  ParamKind kind;
  ParamEffect effect;
  std::optional<ParamValue> default_value;
};

std::span<const HadoopParamInfo> hadoop_params();
const HadoopParamInfo& param_info(HadoopParam id);
const HadoopParamInfo* find_hadoop_param(std::string_view name);

ParamValue get_param(const HadoopConfig& config, HadoopParam id);
// Converts `value` to the parameter's kind. Throws std::invalid_argument on a
// kind mismatch (e.g. 2.5 for an integer parameter, a number for a boolean).
void set_param(HadoopConfig& config, HadoopParam id, const ParamValue& value);

std::string to_string(const ParamValue& value);
double as_double(const ParamValue& value);

template <typename T>
struct NamedField {
  std::string_view name;
  double T::*member;
};

std::span<const NamedField<DataProfile>> profile_fields();
std::span<const NamedField<CostFactors>> cost_fields();

// ---------------------------------------------------------------------------
// Partial configuration and defaulting

// A configuration in which any parameter may be unset.
class PartialHadoopConfig {
 public:
  void set(HadoopParam id, ParamValue value) { values_[id] = value; }
  bool has(HadoopParam id) const { return values_.contains(id); }
  std::optional<ParamValue> get(HadoopParam id) const;
  const std::map<HadoopParam, ParamValue>& values() const { return values_; }
  bool empty() const { return values_.empty(); }

 private:
  std::map<HadoopParam, ParamValue> values_;
};

// Fills every unset parameter that has a stock Hadoop default. Throws
// ValidationError when a parameter without a default is unset.
HadoopConfig apply_defaults(const PartialHadoopConfig& partial);

// Writes every set value of `overrides` on top of `base`.
HadoopConfig apply_overrides(HadoopConfig base, const PartialHadoopConfig& overrides);

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string field;
  std::string constraint;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate(const HadoopConfig& config, const DataProfile& profile,
                                const CostFactors& costs);
inline std::vector<Violation> validate(const JobInputs& in) {
  return validate(in.config, in.profile, in.costs);
}

std::string format_violations(const std::vector<Violation>& violations);

// Validates and normalizes in one step; throws ValidationError.
EffectiveInputs prepare(const JobInputs& in);

}  // namespace mrperf
