#ifndef SAFSIM_SIM_FAILURE_SCHEDULE_HPP
#define SAFSIM_SIM_FAILURE_SCHEDULE_HPP

#include "safsim/topology/topology.hpp"

#include <cstdint>
#include <vector>

namespace safsim::sim {

struct LinkFailure
{
  std::size_t edge = 0;
  Time start = 0.0;
  Time duration = 0.0;
};

/** \brief Draws \p count failures on uniformly chosen links, each starting
 *  uniformly in [0, simTime) and lasting uniformly in [0, floor(simTime/10)].
 */
std::vector<LinkFailure>
drawFailures(const topo::Topology& topology, std::uint32_t count, Time simTime, std::uint64_t seed);

/// \throw std::invalid_argument if a failure is out of range
void
validateFailures(const std::vector<LinkFailure>& failures, std::size_t edgeCount, Time simTime);

} // namespace safsim::sim

#endif // SAFSIM_SIM_FAILURE_SCHEDULE_HPP
