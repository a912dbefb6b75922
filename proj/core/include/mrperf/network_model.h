#pragma once

#include "mrperf/cost_vector.h"
#include "mrperf/params.h"

namespace mrperf {

struct NetworkEstimate {
  double net_transfer_size = 0.0;  // bytes crossing the network, whole job
  CostVector cost;                 // only .net is set
};

// Shuffle traffic: every map's final output leaves its node except the
// 1/pNumNodes share that stays local. Zero for map-only jobs.
NetworkEstimate network_cost(const EffectiveInputs& in, double interm_data_size);

}  // namespace mrperf
