#ifndef SAFSIM_TOPOLOGY_ROUTING_HPP
#define SAFSIM_TOPOLOGY_ROUTING_HPP

#include "safsim/core/fib.hpp"
#include "safsim/topology/topology.hpp"

#include <limits>
#include <vector>

namespace safsim::topo {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/** \brief Hop distance from every node to \p origin, where only routers
 *  relay traffic and \p excluded (if any) is removed from the graph.
 */
std::vector<std::uint32_t>
distancesTo(const Topology& topology, NodeId origin, NodeId excluded = kInvalidNode);

/** \brief Fills one FIB per node with every loop-free next hop towards each
 *  server prefix.
 *
 *  A neighbour n of node v is a next hop if n is the origin, or n is a router
 *  that reaches the origin without passing through v; its cost is one plus
 *  that distance. Servers get no entries for their own prefix.
 */
std::vector<Fib>
bootstrapFibs(const Topology& topology);

} // namespace safsim::topo

#endif // SAFSIM_TOPOLOGY_ROUTING_HPP
