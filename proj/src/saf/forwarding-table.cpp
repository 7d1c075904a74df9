#include "safsim/saf/forwarding-table.hpp"

namespace safsim::saf {

ForwardingTable::ForwardingTable(SafParams params)
  : m_params(params)
{
  m_params.validate();
}

ColumnState&
ForwardingTable::column(const FibEntry& entry)
{
  auto it = m_columns.find(entry.prefix());
  if (it != m_columns.end()) {
    return it->second;
  }

  ColumnState state{{}, m_params.tMin, PeriodStats(m_params.windowN)};
  if (m_params.initialTable == InitialTable::CostWeighted) {
    state.column = ProbabilityColumn::costWeighted(entry.nextHops());
  }
  else {
    std::vector<FaceId> faces;
    for (const auto& hop : entry.nextHops()) {
      faces.push_back(hop.face);
    }
    state.column = ProbabilityColumn::uniform(faces);
  }
  for (auto f : state.column.faces()) {
    state.stats.registerFace(f);
  }
  return m_columns.emplace(entry.prefix(), std::move(state)).first->second;
}

ColumnState*
ForwardingTable::find(const Name& prefix)
{
  auto it = m_columns.find(prefix);
  return it == m_columns.end() ? nullptr : &it->second;
}

const ColumnState*
ForwardingTable::find(const Name& prefix) const
{
  auto it = m_columns.find(prefix);
  return it == m_columns.end() ? nullptr : &it->second;
}

void
ForwardingTable::updateAll()
{
  for (auto& [prefix, state] : m_columns) {
    applyPeriodUpdate(state.column, state.threshold, state.stats, m_params);
  }
}

} // namespace safsim::saf
