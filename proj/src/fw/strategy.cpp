#include "safsim/fw/strategy.hpp"
#include "safsim/fw/basic-strategies.hpp"
#include "safsim/fw/inrr-strategy.hpp"
#include "safsim/fw/ompif-strategy.hpp"
#include "safsim/fw/saf-strategy.hpp"

#include <algorithm>

namespace safsim::fw {

const std::vector<std::string>&
strategyNames()
{
  static const std::vector<std::string> names{
    "saf", "broadcast", "shortest-route", "delay-rank", "rfa", "ompif", "inrr"};
  return names;
}

void
StrategyParams::validate() const
{
  const auto& names = strategyNames();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw std::invalid_argument("unknown strategy '" + name + "'");
  }
  saf.validate();
  if (!(rfaBeta >= 0.0 && rfaBeta <= 1.0)) {
    throw std::invalid_argument("rfa_beta must lie in [0,1]");
  }
  if (!(rfaInterval > 0.0)) {
    throw std::invalid_argument("rfa_interval must be positive");
  }
  if (!(ompifProbeInterval > 0.0)) {
    throw std::invalid_argument("probe_interval must be positive");
  }
  if (!(delayRankEwma > 0.0 && delayRankEwma <= 1.0)) {
    throw std::invalid_argument("ewma_weight must lie in ]0,1]");
  }
}

std::unique_ptr<Strategy>
makeStrategy(const StrategyParams& params, const NodeEnvironment& env)
{
  if (params.name == "saf") {
    return std::make_unique<SafStrategy>(params.saf);
  }
  if (params.name == "broadcast") {
    return std::make_unique<BroadcastStrategy>();
  }
  if (params.name == "shortest-route") {
    return std::make_unique<ShortestRouteStrategy>();
  }
  if (params.name == "delay-rank") {
    return std::make_unique<DelayRankStrategy>(params.delayRankEwma);
  }
  if (params.name == "rfa") {
    return std::make_unique<RfaStrategy>(params.rfaBeta, params.rfaInterval);
  }
  if (params.name == "ompif") {
    return std::make_unique<OmpIfStrategy>(env, params.ompifProbeInterval);
  }
  if (params.name == "inrr") {
    return std::make_unique<InrrStrategy>(env);
  }
  throw std::invalid_argument("unknown strategy '" + params.name + "'");
}

} // namespace safsim::fw
