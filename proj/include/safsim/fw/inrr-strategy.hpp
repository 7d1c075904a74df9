#ifndef SAFSIM_FW_INRR_STRATEGY_HPP
#define SAFSIM_FW_INRR_STRATEGY_HPP

#include "safsim/fw/strategy.hpp"

namespace safsim::fw {

/** \brief Nearest-replica routing: asks the cache oracle which nodes hold the
 *  chunk and forwards towards the closest of them or the origin server.
 *
 *  Distances are hop counts over links that are currently up, relaying only
 *  through routers. Equal distances go to the lowest node id, and among equal
 *  paths to that node the lowest first-hop face wins.
 */
class InrrStrategy final : public Strategy
{
public:
  explicit
  InrrStrategy(const NodeEnvironment& env)
    : m_env(env)
  {
  }

  Decision
  afterReceiveInterest(StrategyContext& ctx, const Interest& interest,
                       std::optional<FaceId> inFace, const FibEntry& entry) override;

private:
  NodeEnvironment m_env;
};

} // namespace safsim::fw

#endif // SAFSIM_FW_INRR_STRATEGY_HPP
