#include "safsim/saf/measure.hpp"

namespace safsim::saf {

Outcome
ThroughputMeasure::classify(const OutcomeRecord& record) const
{
  return record.dataBeforeTimeout ? Outcome::Satisfied : Outcome::Unsatisfied;
}

Outcome
HopCountMeasure::classify(const OutcomeRecord& record) const
{
  return record.dataBeforeTimeout && record.hopCount < m_maxHops ? Outcome::Satisfied : Outcome::Unsatisfied;
}

void
recordOutcome(PeriodStats& stats, const OutcomeRecord& record, const Measure& measure)
{
  if (record.face == kDropFace) {
    stats.addDropped();
    return;
  }
  if (measure.classify(record) == Outcome::Satisfied) {
    stats.addSatisfied(record.face);
  }
  else {
    stats.addUnsatisfied(record.face);
  }
}

} // namespace safsim::saf
