#include "mrperf/params.h"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "mrperf/errors.h"
#include "numeric.h"

namespace mrperf {

namespace {

constexpr double kMiB = 1024.0 * 1024.0;

using ConfigMember =
    std::variant<std::int64_t HadoopConfig::*, double HadoopConfig::*, bool HadoopConfig::*>;

struct ParamEntry {
  HadoopParamInfo info;
  ConfigMember member;
};

const std::array<ParamEntry, 21>& param_table() {
  using K = ParamKind;
  using E = ParamEffect;
  using C = HadoopConfig;
  using I = std::int64_t;
  static const std::array<ParamEntry, 21> table = {{
      {{HadoopParam::kNumNodes, "pNumNodes", "(cluster size)", K::kInteger, E::kSystem, std::nullopt},
       &C::num_nodes},
      {{HadoopParam::kTaskMem, "pTaskMem", "mapred.child.java.opts", K::kMemory, E::kSystem,
        ParamValue{200.0 * kMiB}},
       &C::task_mem},
      {{HadoopParam::kMaxMapsPerNode, "pMaxMapsPerNode", "mapred.tasktracker.map.tasks.maximum",
        K::kInteger, E::kSystem, ParamValue{I{2}}},
       &C::max_maps_per_node},
      {{HadoopParam::kMaxRedPerNode, "pMaxRedPerNode", "mapred.tasktracker.reduce.tasks.maximum",
        K::kInteger, E::kSystem, ParamValue{I{2}}},
       &C::max_reduces_per_node},
      {{HadoopParam::kNumMappers, "pNumMappers", "mapred.map.tasks", K::kInteger, E::kJob,
        std::nullopt},
       &C::num_mappers},
      {{HadoopParam::kSortMB, "pSortMB", "io.sort.mb", K::kReal, E::kJob, ParamValue{100.0}},
       &C::sort_mb},
      {{HadoopParam::kSpillPerc, "pSpillPerc", "io.sort.spill.percent", K::kReal, E::kJob,
        ParamValue{0.8}},
       &C::spill_percent},
      {{HadoopParam::kSortRecPerc, "pSortRecPerc", "io.sort.record.percent", K::kReal, E::kJob,
        ParamValue{0.05}},
       &C::sort_record_percent},
      {{HadoopParam::kSortFactor, "pSortFactor", "io.sort.factor", K::kInteger, E::kJob,
        ParamValue{I{10}}},
       &C::sort_factor},
      {{HadoopParam::kNumSpillsForComb, "pNumSpillsForComb", "min.num.spills.for.combine",
        K::kInteger, E::kJob, ParamValue{I{3}}},
       &C::num_spills_for_combine},
      {{HadoopParam::kNumReducers, "pNumReducers", "mapred.reduce.tasks", K::kInteger, E::kJob,
        std::nullopt},
       &C::num_reducers},
      {{HadoopParam::kInMemMergeThr, "pInMemMergeThr", "mapred.inmem.merge.threshold",
        K::kInteger, E::kJob, ParamValue{I{1000}}},
       &C::in_mem_merge_threshold},
      {{HadoopParam::kShuffleInBufPerc, "pShuffleInBufPerc",
        "mapred.job.shuffle.input.buffer.percent", K::kReal, E::kJob, ParamValue{0.7}},
       &C::shuffle_input_buffer_percent},
      {{HadoopParam::kShuffleMergePerc, "pShuffleMergePerc", "mapred.job.shuffle.merge.percent",
        K::kReal, E::kJob, ParamValue{0.66}},
       &C::shuffle_merge_percent},
      {{HadoopParam::kReducerInBufPerc, "pReducerInBufPerc",
        "mapred.job.reduce.input.buffer.percent", K::kReal, E::kJob, ParamValue{0.0}},
       &C::reducer_input_buffer_percent},
      {{HadoopParam::kUseCombine, "pUseCombine", "mapred.combine.class", K::kBoolean, E::kJob,
        ParamValue{false}},
       &C::use_combine},
      {{HadoopParam::kIsIntermCompressed, "pIsIntermCompressed", "mapred.compress.map.output",
        K::kBoolean, E::kJob, ParamValue{false}},
       &C::is_interm_compressed},
      {{HadoopParam::kIsOutCompressed, "pIsOutCompressed", "mapred.output.compress", K::kBoolean,
        E::kJob, ParamValue{false}},
       &C::is_out_compressed},
      {{HadoopParam::kReduceSlowstart, "pReduceSlowstart",
        "mapred.reduce.slowstart.completed.maps", K::kReal, E::kJob, ParamValue{0.05}},
       &C::reduce_slowstart},
      {{HadoopParam::kIsInCompressed, "pIsInCompressed", "(input is compressed)", K::kBoolean,
        E::kInput, ParamValue{false}},
       &C::is_in_compressed},
      {{HadoopParam::kSplitSize, "pSplitSize", "(input split size)", K::kReal, E::kInput,
        std::nullopt},
       &C::split_size},
  }};
  return table;
}

const ParamEntry& entry(HadoopParam id) {
  const auto& table = param_table();
  const auto index = static_cast<std::size_t>(id);
  if (index >= table.size() || table[index].info.id != id) {
    throw std::logic_error("hadoop parameter table out of order");
  }
  return table[index];
}

bool is_finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

class ViolationCollector {
 public:
  void check(bool ok, std::string_view field, std::string_view constraint) {
    if (!ok) out_.push_back({std::string(field), std::string(constraint)});
  }
  std::vector<Violation> take() { return std::move(out_); }
  std::size_t size() const { return out_.size(); }

 private:
  std::vector<Violation> out_;
};

}  // namespace

CostFactors CostFactors::scaled(double k) const {
  CostFactors out = *this;
  for (const auto& f : cost_fields()) out.*(f.member) *= k;
  return out;
}

std::span<const HadoopParamInfo> hadoop_params() {
  static const std::vector<HadoopParamInfo> infos = [] {
    std::vector<HadoopParamInfo> v;
    for (const auto& e : param_table()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const HadoopParamInfo& param_info(HadoopParam id) { return entry(id).info; }

const HadoopParamInfo* find_hadoop_param(std::string_view name) {
  for (const auto& e : param_table()) {
    if (e.info.name == name) return &e.info;
  }
  return nullptr;
}

ParamValue get_param(const HadoopConfig& config, HadoopParam id) {
  return std::visit([&](auto member) -> ParamValue { return config.*member; }, entry(id).member);
}

void set_param(HadoopConfig& config, HadoopParam id, const ParamValue& value) {
  const ParamEntry& e = entry(id);
  const std::string name(e.info.name);
  std::visit(
      [&](auto member) {
        using Field = std::remove_reference_t<decltype(config.*member)>;
        if constexpr (std::is_same_v<Field, bool>) {
          if (!std::holds_alternative<bool>(value)) {
            throw std::invalid_argument(name + ": expected a boolean");
          }
          config.*member = std::get<bool>(value);
        } else if constexpr (std::is_same_v<Field, std::int64_t>) {
          if (const auto* i = std::get_if<std::int64_t>(&value)) {
            config.*member = *i;
          } else if (const auto* d = std::get_if<double>(&value)) {
            if (!std::isfinite(*d) || std::trunc(*d) != *d || std::fabs(*d) > 9.0e15) {
              throw std::invalid_argument(name + ": expected an integer");
            }
            config.*member = static_cast<std::int64_t>(*d);
          } else {
            throw std::invalid_argument(name + ": expected an integer");
          }
        } else {
          if (const auto* i = std::get_if<std::int64_t>(&value)) {
            config.*member = static_cast<double>(*i);
          } else if (const auto* d = std::get_if<double>(&value)) {
            config.*member = *d;
          } else {
            throw std::invalid_argument(name + ": expected a number");
          }
        }
      },
      e.member);
}

std::string to_string(const ParamValue& value) {
  return std::visit(
      [](auto v) -> std::string {
        if constexpr (std::is_same_v<decltype(v), bool>) {
          return v ? "true" : "false";
        } else {
          std::ostringstream os;
          os.precision(17);
          os << v;
          return os.str();
        }
      },
      value);
}

double as_double(const ParamValue& value) {
  return std::visit([](auto v) { return static_cast<double>(v); }, value);
}

std::span<const NamedField<DataProfile>> profile_fields() {
  using P = DataProfile;
  static const std::array<NamedField<P>, 10> fields = {{
      {"sInputPairWidth", &P::input_pair_width},
      {"sMapSizeSel", &P::map_size_sel},
      {"sMapPairsSel", &P::map_pairs_sel},
      {"sReduceSizeSel", &P::reduce_size_sel},
      {"sReducePairsSel", &P::reduce_pairs_sel},
      {"sCombineSizeSel", &P::combine_size_sel},
      {"sCombinePairsSel", &P::combine_pairs_sel},
      {"sInputCompressRatio", &P::input_compress_ratio},
      {"sIntermCompressRatio", &P::interm_compress_ratio},
      {"sOutCompressRatio", &P::out_compress_ratio},
  }};
  return fields;
}

std::span<const NamedField<CostFactors>> cost_fields() {
  using F = CostFactors;
  static const std::array<NamedField<F>, 15> fields = {{
      {"cHdfsReadCost", &F::hdfs_read},
      {"cHdfsWriteCost", &F::hdfs_write},
      {"cLocalIOCost", &F::local_io},
      {"cNetworkCost", &F::network},
      {"cMapCPUCost", &F::map_cpu},
      {"cReduceCPUCost", &F::reduce_cpu},
      {"cCombineCPUCost", &F::combine_cpu},
      {"cPartitionCPUCost", &F::partition_cpu},
      {"cSerdeCPUCost", &F::serde_cpu},
      {"cSortCPUCost", &F::sort_cpu},
      {"cMergeCPUCost", &F::merge_cpu},
      {"cInUncomprCPUCost", &F::in_uncompress_cpu},
      {"cIntermUncomprCPUCost", &F::interm_uncompress_cpu},
      {"cIntermComprCPUCost", &F::interm_compress_cpu},
      {"cOutComprCPUCost", &F::out_compress_cpu},
  }};
  return fields;
}

std::optional<ParamValue> PartialHadoopConfig::get(HadoopParam id) const {
  auto it = values_.find(id);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

HadoopConfig apply_defaults(const PartialHadoopConfig& partial) {
  HadoopConfig config;
  std::vector<Violation> missing;
  for (const auto& e : param_table()) {
    if (auto v = partial.get(e.info.id)) {
      set_param(config, e.info.id, *v);
    } else if (e.info.default_value) {
      set_param(config, e.info.id, *e.info.default_value);
    } else {
      missing.push_back({std::string(e.info.name), "required (no default value)"});
    }
  }
  if (!missing.empty()) throw ValidationError(std::move(missing));
  return config;
}

HadoopConfig apply_overrides(HadoopConfig base, const PartialHadoopConfig& overrides) {
  for (const auto& [id, value] : overrides.values()) set_param(base, id, value);
  return base;
}

EffectiveInputs normalize(const HadoopConfig& config, const DataProfile& profile,
                          const CostFactors& costs) {
  DataProfile p = profile;
  CostFactors c = costs;
  if (!config.use_combine) {
    p.combine_size_sel = 1.0;
    p.combine_pairs_sel = 1.0;
    c.combine_cpu = 0.0;
  }
  if (!config.is_in_compressed) {
    p.input_compress_ratio = 1.0;
    c.in_uncompress_cpu = 0.0;
  }
  if (!config.is_interm_compressed) {
    p.interm_compress_ratio = 1.0;
    c.interm_uncompress_cpu = 0.0;
    c.interm_compress_cpu = 0.0;
  }
  if (!config.is_out_compressed) {
    p.out_compress_ratio = 1.0;
    c.out_compress_cpu = 0.0;
  }
  return EffectiveInputs(config, p, c);
}

std::vector<Violation> validate(const HadoopConfig& config, const DataProfile& profile,
                                const CostFactors& costs) {
  ViolationCollector v;
  const auto unit_closed = [](double x) { return x >= 0.0 && x <= 1.0; };
  const auto& c = config;

  v.check(c.num_nodes >= 1, "pNumNodes", "must be >= 1");
  v.check(std::isfinite(c.task_mem) && c.task_mem > 0.0, "pTaskMem", "must be > 0 bytes");
  v.check(c.max_maps_per_node >= 1, "pMaxMapsPerNode", "must be >= 1");
  v.check(c.max_reduces_per_node >= 1, "pMaxRedPerNode", "must be >= 1");
  v.check(c.num_mappers >= 1, "pNumMappers", "must be >= 1");
  v.check(c.num_reducers >= 0, "pNumReducers", "must be >= 0");
  v.check(std::isfinite(c.sort_mb) && c.sort_mb > 0.0, "pSortMB", "must be > 0");
  v.check(c.spill_percent > 0.0 && c.spill_percent <= 1.0, "pSpillPerc", "must be in (0,1]");
  v.check(c.sort_record_percent >= 0.0 && c.sort_record_percent < 1.0, "pSortRecPerc",
          "must be in [0,1)");
  v.check(c.sort_factor >= 2, "pSortFactor", "must be >= 2");
  v.check(c.num_spills_for_combine >= 1, "pNumSpillsForComb", "must be >= 1");
  v.check(c.in_mem_merge_threshold >= 1, "pInMemMergeThr", "must be >= 1");
  v.check(unit_closed(c.shuffle_input_buffer_percent), "pShuffleInBufPerc", "must be in [0,1]");
  v.check(unit_closed(c.shuffle_merge_percent), "pShuffleMergePerc", "must be in [0,1]");
  v.check(unit_closed(c.reducer_input_buffer_percent), "pReducerInBufPerc", "must be in [0,1]");
  v.check(unit_closed(c.reduce_slowstart), "pReduceSlowstart", "must be in [0,1]");
  v.check(std::isfinite(c.split_size) && c.split_size > 0.0, "pSplitSize", "must be > 0 bytes");

  const auto& p = profile;
  v.check(std::isfinite(p.input_pair_width) && p.input_pair_width > 0.0, "sInputPairWidth",
          "must be > 0");
  for (const auto& f : profile_fields()) {
    const double x = p.*(f.member);
    if (f.name == "sInputPairWidth") continue;
    if (f.name.ends_with("CompressRatio")) {
      v.check(x > 0.0 && x <= 1.0, f.name, "must be in (0,1]");
    } else {
      v.check(is_finite_nonneg(x), f.name, "must be >= 0");
    }
  }
  for (const auto& f : cost_fields()) {
    v.check(is_finite_nonneg(costs.*(f.member)), f.name, "must be >= 0");
  }

  // Cross-field constraints for jobs with a sort/spill phase, checked only
  // once the fields they combine are individually valid.
  const std::size_t before = v.size();
  if (before == 0 && c.num_reducers > 0) {
    v.check(p.map_size_sel > 0.0, "sMapSizeSel", "must be > 0 when pNumReducers > 0");
    v.check(p.map_pairs_sel > 0.0, "sMapPairsSel", "must be > 0 when pNumReducers > 0");
    const double buffer = c.sort_mb * kMiB * c.spill_percent;
    const double max_acc = detail::floor_snapped(buffer * c.sort_record_percent / 16.0);
    v.check(max_acc >= 1.0, "pSortRecPerc",
            "accounting buffer must hold at least one record");
    if (v.size() == before) {
      const double out_pair_width = p.input_pair_width * p.map_size_sel / p.map_pairs_sel;
      const double max_ser =
          detail::floor_snapped(buffer * (1.0 - c.sort_record_percent) / out_pair_width);
      v.check(max_ser >= 1.0, "pSortMB", "serialization buffer must hold at least one record");
    }
  }
  return v.take();
}

std::string format_violations(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& violation : violations) {
    if (!out.empty()) out += "; ";
    out += violation.field + ": " + violation.constraint;
  }
  return out;
}

EffectiveInputs prepare(const JobInputs& in) {
  auto violations = validate(in);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return normalize(in);
}

}  // namespace mrperf
