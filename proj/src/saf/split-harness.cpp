#include "safsim/saf/split-harness.hpp"

#include <algorithm>
#include <limits>

namespace safsim::saf {

SplitHarness::SplitHarness(ProbabilityColumn initial, double threshold, SafParams params, double demand)
  : m_column(std::move(initial))
  , m_threshold(threshold)
  , m_params(params)
  , m_demand(demand)
  , m_stats(params.windowN)
{
  m_params.validate();
  for (auto f : m_column.faces()) {
    m_stats.registerFace(f);
  }
}

void
SplitHarness::setCapacity(FaceId face, double capacity)
{
  m_capacity[face] = capacity;
}

UpdateReport
SplitHarness::step()
{
  for (auto f : m_column.faces()) {
    m_stats.registerFace(f);
    double load = m_column.get(f) * m_demand;
    auto cap = m_capacity.find(f);
    double capacity = cap == m_capacity.end() ? std::numeric_limits<double>::infinity() : cap->second;
    double satisfied = std::min(load, capacity);
    m_stats.addSatisfied(f, satisfied);
    m_stats.addUnsatisfied(f, load - satisfied);
  }
  m_stats.addDropped(m_column.drop() * m_demand);

  double before = m_threshold;
  auto report = applyPeriodUpdate(m_column, m_threshold, m_stats, m_params);
  if (m_frozen) {
    m_threshold = before;
    report.thresholdAfter = before;
  }
  return report;
}

} // namespace safsim::saf
