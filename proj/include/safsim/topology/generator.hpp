#ifndef SAFSIM_TOPOLOGY_GENERATOR_HPP
#define SAFSIM_TOPOLOGY_GENERATOR_HPP

#include "safsim/topology/topology.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace safsim::topo {

enum class BandwidthClass {
  Low,
  Medium,
  High,
};

enum class ConnectivityClass {
  Low,
  Medium,
  High,
};

/// Bandwidth interval in bit/s.
struct BandwidthRange
{
  double min = 0.0;
  double max = 0.0;
};

BandwidthRange
topBandwidth(BandwidthClass c);

BandwidthRange
bottomBandwidth(BandwidthClass c);

/// \throw std::invalid_argument on unknown names
BandwidthClass
parseBandwidthClass(std::string_view name);

ConnectivityClass
parseConnectivityClass(std::string_view name);

class InfeasibleSpec : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

struct TopologySpec
{
  std::uint32_t asCount = 5;
  std::uint32_t routersPerAs = 20;
  /// extra router-router edges between distinct autonomous systems
  std::uint32_t extraEdgesTop = 5;
  /// extra intra-AS edges, added in every autonomous system
  std::uint32_t extraEdgesBottom = 10;
  BandwidthClass bandwidth = BandwidthClass::Medium;
  std::uint32_t clientCount = 100;
  std::uint32_t serverCount = 10;
  std::uint64_t seed = 1;
  /// separate seed for attaching clients and servers; \c seed if unset
  std::optional<std::uint64_t> placementSeed = std::nullopt;
  double propagationDelay = kDefaultPropagationDelay;

  /// Sets both extra edge counts from a connectivity variant.
  void
  applyConnectivity(ConnectivityClass c);

  /// \throw std::invalid_argument listing every violated invariant
  void
  validate() const;

  /// \throw InfeasibleSpec if the extra edges do not fit; requires a valid spec
  void
  checkFeasible() const;
};

/** \brief Two-level scale-free topology.
 *
 *  Every autonomous system is a preferential-attachment tree (one link per
 *  new router); the systems themselves are joined by a preferential-attachment
 *  tree whose edges connect the highest-degree router of each system. Extra
 *  random edges are then added inside every system and between routers of
 *  distinct systems. Clients and servers hang off uniformly chosen routers.
 *  \throw InfeasibleSpec if the extra edges do not fit
 */
Topology
generate(const TopologySpec& spec);

} // namespace safsim::topo

#endif // SAFSIM_TOPOLOGY_GENERATOR_HPP
