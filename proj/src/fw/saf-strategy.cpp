#include "safsim/fw/saf-strategy.hpp"

namespace safsim::fw {

SafStrategy::SafStrategy(saf::SafParams params)
  : m_table(params)
{
}

Decision
SafStrategy::afterReceiveInterest(StrategyContext& ctx, const Interest&,
                                  std::optional<FaceId> inFace, const FibEntry& entry)
{
  auto& state = m_table.column(entry);
  auto face = saf::selectFace(state.column, inFace, ctx.rng);
  if (face == kDropFace) {
    saf::recordOutcome(state.stats, {kDropFace, 0.0, 0, false}, m_measure);
    return Decision::dropFace();
  }
  return Decision::to(face);
}

void
SafStrategy::onData(StrategyContext&, const FibEntry& entry, const Name&, FaceId face,
                    double delay, std::uint32_t hopCount)
{
  auto& state = m_table.column(entry);
  if (state.stats.hasFace(face)) {
    saf::recordOutcome(state.stats, {face, delay, hopCount, true}, m_measure);
  }
}

void
SafStrategy::onTimeout(StrategyContext&, const FibEntry& entry, const Name&, FaceId face)
{
  auto& state = m_table.column(entry);
  if (state.stats.hasFace(face)) {
    saf::recordOutcome(state.stats, {face, 0.0, 0, false}, m_measure);
  }
}

void
SafStrategy::onPeriod(StrategyContext&)
{
  m_table.updateAll();
}

} // namespace safsim::fw
