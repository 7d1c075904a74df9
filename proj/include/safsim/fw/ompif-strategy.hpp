#ifndef SAFSIM_FW_OMPIF_STRATEGY_HPP
#define SAFSIM_FW_OMPIF_STRATEGY_HPP

#include "safsim/fw/strategy.hpp"

#include <map>
#include <set>

namespace safsim::fw {

class OmpIfStrategy;

/** \brief Shared view of every router's pinned faces, used by access
 *  routers to follow the path behind each of their faces.
 */
class OmpIfRegistry
{
public:
  explicit
  OmpIfRegistry(const topo::Topology& topology)
    : m_topology(topology)
  {
  }

  void
  attach(NodeId node, OmpIfStrategy* strategy);

  std::optional<FaceId>
  pinnedFace(NodeId node, const Name& prefix) const;

  /** \brief Routers visited when leaving \p start on \p face and following
   *  pinned faces until a server of \p prefix.
   *  \return nothing if the chain loops, dead-ends or ends at the wrong server
   */
  std::optional<std::vector<NodeId>>
  walk(NodeId start, FaceId face, const Name& prefix) const;

  void
  setActivePaths(NodeId access, const Name& prefix, std::vector<std::vector<NodeId>> paths);

  const std::vector<std::vector<NodeId>>&
  activePaths(NodeId access, const Name& prefix) const;

private:
  const topo::Topology& m_topology;
  std::map<NodeId, OmpIfStrategy*> m_strategies;
  std::map<std::pair<NodeId, Name>, std::vector<std::vector<NodeId>>> m_active;
};

/** \brief Multipath forwarding over node-disjoint paths.
 *
 *  Every router forwards a prefix on one pinned face, initially its
 *  lowest-cost face. Periodically the next Interest is broadcast on all
 *  faces as a probe and the face of the first returning Data becomes the new
 *  pin. A router receiving Interests from a client spreads them by smooth
 *  weighted round robin over faces whose pinned paths are node-disjoint,
 *  with weights proportional to the reciprocal measured delay.
 */
class OmpIfStrategy final : public Strategy
{
public:
  OmpIfStrategy(const NodeEnvironment& env, double probeInterval, double delayWeight = 0.3);

  Decision
  afterReceiveInterest(StrategyContext& ctx, const Interest& interest,
                       std::optional<FaceId> inFace, const FibEntry& entry) override;

  void
  onData(StrategyContext& ctx, const FibEntry& entry, const Name& name, FaceId face,
         double delay, std::uint32_t hopCount) override;

  void
  onTimeout(StrategyContext& ctx, const FibEntry& entry, const Name& name, FaceId face) override;

  std::optional<FaceId>
  pinnedFace(const Name& prefix) const;

  /// round-robin weights of the disjoint faces, normalised to sum 1
  std::map<FaceId, double>
  weights(const FibEntry& entry);

  void
  setDelay(const Name& prefix, FaceId face, double delay);

private:
  bool
  fromConsumer(std::optional<FaceId> inFace) const;

  std::vector<FaceId>
  disjointFaces(const FibEntry& entry);

  struct PrefixState
  {
    std::optional<FaceId> pin;
    Time nextProbe = -1.0;
    std::map<FaceId, double> delay;
    std::map<FaceId, double> credit;
  };

  PrefixState&
  state(const FibEntry& entry);

  static std::map<FaceId, double>
  rawWeights(const PrefixState& s, const std::vector<FaceId>& faces);

  NodeEnvironment m_env;
  double m_probeInterval;
  double m_delayWeight;
  std::map<Name, PrefixState> m_prefixes;
  std::set<Name> m_probes;
};

} // namespace safsim::fw

#endif // SAFSIM_FW_OMPIF_STRATEGY_HPP
