#include "mrperf/network_model.h"

namespace mrperf {

NetworkEstimate network_cost(const EffectiveInputs& in, double interm_data_size) {
  const auto& c = in.config();
  NetworkEstimate n;
  if (c.num_reducers == 0) return n;
  const double nodes = static_cast<double>(c.num_nodes);
  n.net_transfer_size =
      interm_data_size * static_cast<double>(c.num_mappers) * (nodes - 1.0) / nodes;
  n.cost.net = n.net_transfer_size * in.costs().network;
  return n;
}

}  // namespace mrperf
