#ifndef SAFSIM_SCENARIO_WORKLOAD_HPP
#define SAFSIM_SCENARIO_WORKLOAD_HPP

#include "safsim/scenario/config.hpp"
#include "safsim/sim/client-stream.hpp"
#include "safsim/topology/topology.hpp"

#include <vector>

namespace safsim::scenario {

/// Request share of each rank 1..n under Zipf popularity with exponent \p alpha.
std::vector<double>
zipfShares(std::size_t n, double alpha);

/** \brief One request stream per client.
 *
 *  Each client starts at a uniform offset in [0, min(maxStartOffset, simTime/2)]
 *  and asks a single server for sequential chunks. The server is uniform over
 *  all servers, or drawn by Zipf rank in server order.
 */
std::vector<sim::ClientStream>
generateWorkload(const ScenarioConfig& config, const topo::Topology& topology, std::uint64_t seed);

} // namespace safsim::scenario

#endif // SAFSIM_SCENARIO_WORKLOAD_HPP
