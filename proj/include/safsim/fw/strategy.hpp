#ifndef SAFSIM_FW_STRATEGY_HPP
#define SAFSIM_FW_STRATEGY_HPP

#include "safsim/core/fib.hpp"
#include "safsim/core/packet.hpp"
#include "safsim/core/random.hpp"
#include "safsim/saf/saf-params.hpp"
#include "safsim/topology/topology.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace safsim::fw {

/// Faces an Interest goes out on; no faces means it is dropped here.
struct Decision
{
  std::vector<FaceId> faces;
  /// dropped by sending it to the virtual dropping face
  bool viaDropFace = false;

  static Decision
  drop()
  {
    return {};
  }

  static Decision
  dropFace()
  {
    return {{}, true};
  }

  static Decision
  to(FaceId face)
  {
    return {{face}, false};
  }

  bool
  isDrop() const noexcept
  {
    return faces.empty();
  }
};

/** \brief Global, read-only view of the running network: which links are up
 *  and which nodes currently cache a given chunk.
 */
class CacheOracle
{
public:
  virtual
  ~CacheOracle() = default;

  virtual bool
  isLinkUp(std::size_t edge) const = 0;

  /// nodes whose Content Store holds \p name right now, ascending
  virtual std::vector<NodeId>
  holders(const Name& name) const = 0;
};

class OmpIfRegistry;

/// What a strategy instance knows about the node it runs on.
struct NodeEnvironment
{
  NodeId node = 0;
  const topo::Topology* topology = nullptr;
  const Fib* fib = nullptr;
  const CacheOracle* oracle = nullptr;
  OmpIfRegistry* ompif = nullptr;
};

struct StrategyContext
{
  Time now = 0.0;
  Rng& rng;
};

/** \brief Per-node forwarding logic.
 *
 *  The node calls afterReceiveInterest for every Interest that created a new
 *  PIT entry, and reports Data and timeouts for the faces the Interest was
 *  sent to.
 */
class Strategy
{
public:
  virtual
  ~Strategy() = default;

  virtual Decision
  afterReceiveInterest(StrategyContext& ctx, const Interest& interest,
                       std::optional<FaceId> inFace, const FibEntry& entry) = 0;

  virtual void
  onData(StrategyContext&, const FibEntry&, const Name&, FaceId, double, std::uint32_t)
  {
  }

  virtual void
  onTimeout(StrategyContext&, const FibEntry&, const Name&, FaceId)
  {
  }

  /// interval of onPeriod calls, none if the strategy has no periodic work
  virtual std::optional<Time>
  periodInterval() const
  {
    return std::nullopt;
  }

  virtual void
  onPeriod(StrategyContext&)
  {
  }
};

struct StrategyParams
{
  std::string name = "saf";
  saf::SafParams saf;
  double rfaBeta = 0.1;
  double rfaInterval = 1.0;
  double ompifProbeInterval = 5.0;
  double delayRankEwma = 0.3;

  /// \throw std::invalid_argument
  void
  validate() const;
};

const std::vector<std::string>&
strategyNames();

/// \throw std::invalid_argument for an unknown strategy name
std::unique_ptr<Strategy>
makeStrategy(const StrategyParams& params, const NodeEnvironment& env);

} // namespace safsim::fw

#endif // SAFSIM_FW_STRATEGY_HPP
