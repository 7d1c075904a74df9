#include "safsim/sim/link.hpp"

#include <algorithm>

namespace safsim::sim {

std::size_t
LinkDirection::backlog(Time now)
{
  while (!m_inService.empty() && m_inService.front() <= now) {
    m_inService.pop_front();
  }
  return m_inService.size();
}

std::optional<Time>
LinkDirection::transmit(Time now, std::uint32_t bytes, double bandwidth, Time delay, std::size_t queueCapacity)
{
  if (backlog(now) >= queueCapacity) {
    return std::nullopt;
  }
  Time start = std::max(now, m_busyUntil);
  m_busyUntil = start + static_cast<double>(bytes) * 8.0 / bandwidth;
  m_inService.push_back(m_busyUntil);
  return m_busyUntil + delay;
}

void
LinkDirection::reset(Time now)
{
  m_inService.clear();
  m_busyUntil = now;
}

} // namespace safsim::sim
