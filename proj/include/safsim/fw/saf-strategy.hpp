#ifndef SAFSIM_FW_SAF_STRATEGY_HPP
#define SAFSIM_FW_SAF_STRATEGY_HPP

#include "safsim/fw/strategy.hpp"
#include "safsim/saf/forwarding-table.hpp"
#include "safsim/saf/measure.hpp"

namespace safsim::fw {

/** \brief Stochastic adaptive forwarding: each Interest draws its face from
 *  the prefix column, outcomes feed the period statistics, and every period
 *  the columns are updated.
 */
class SafStrategy final : public Strategy
{
public:
  explicit
  SafStrategy(saf::SafParams params);

  Decision
  afterReceiveInterest(StrategyContext& ctx, const Interest& interest,
                       std::optional<FaceId> inFace, const FibEntry& entry) override;

  void
  onData(StrategyContext& ctx, const FibEntry& entry, const Name& name, FaceId face,
         double delay, std::uint32_t hopCount) override;

  void
  onTimeout(StrategyContext& ctx, const FibEntry& entry, const Name& name, FaceId face) override;

  std::optional<Time>
  periodInterval() const override
  {
    return m_table.params().periodTau;
  }

  void
  onPeriod(StrategyContext& ctx) override;

  const saf::ForwardingTable&
  table() const noexcept
  {
    return m_table;
  }

private:
  saf::ForwardingTable m_table;
  saf::ThroughputMeasure m_measure;
};

} // namespace safsim::fw

#endif // SAFSIM_FW_SAF_STRATEGY_HPP
