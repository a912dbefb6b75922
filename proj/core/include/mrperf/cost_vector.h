#pragma once

namespace mrperf {

// Additive I/O, CPU and network cost of a phase, task or job, in abstract
// cost units.
struct CostVector {
  double io = 0.0;
  double cpu = 0.0;
  double net = 0.0;

  constexpr double total() const { return io + cpu + net; }

  constexpr CostVector& operator+=(const CostVector& other) {
    io += other.io;
    cpu += other.cpu;
    net += other.net;
    return *this;
  }

  friend constexpr CostVector operator+(CostVector lhs, const CostVector& rhs) {
    return lhs += rhs;
  }

  friend constexpr CostVector operator*(double k, const CostVector& v) {
    return {k * v.io, k * v.cpu, k * v.net};
  }

  friend constexpr bool operator==(const CostVector&, const CostVector&) = default;
};

}  // namespace mrperf
