#pragma once

#include <cmath>
#include <cstdint>

namespace mrperf::detail {

// floor/ceil that treat values within 1e-9 (relative) of an integer as that
// integer, so that e.g. 58.999999999999993 floors to 59. The model's sizes are
// products of decimal fractions and would otherwise lose a unit at exact
// boundaries.
inline double snap_to_integer(double x) {
  const double r = std::round(x);
  const double tol = 1e-9 * std::fmax(1.0, std::fabs(x));
  return std::fabs(x - r) <= tol ? r : x;
}

inline double floor_snapped(double x) { return std::floor(snap_to_integer(x)); }
inline double ceil_snapped(double x) { return std::ceil(snap_to_integer(x)); }

inline std::int64_t to_count(double x) { return static_cast<std::int64_t>(x); }

}  // namespace mrperf::detail
