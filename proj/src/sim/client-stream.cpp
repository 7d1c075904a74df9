#include "safsim/sim/client-stream.hpp"

#include <algorithm>
#include <cmath>

namespace safsim::sim {

Name
chunkName(const ClientStream& stream, std::uint64_t index)
{
  return stream.prefix.append("c" + std::to_string(index % stream.catalogueSize));
}

EmissionClock::EmissionClock(const ClientStream& stream)
  : m_rate(stream.rate)
  , m_secondStart(stream.start)
  , m_rng(stream.seed)
{
  fillSecond();
}

void
EmissionClock::fillSecond()
{
  m_pending.clear();
  m_pos = 0;
  double whole = std::floor(m_rate);
  auto count = static_cast<std::size_t>(whole);
  if (m_rng.uniform01() < m_rate - whole) {
    ++count;
  }
  for (std::size_t i = 0; i < count; ++i) {
    m_pending.push_back(m_secondStart + m_rng.uniform01());
  }
  std::sort(m_pending.begin(), m_pending.end());
}

std::optional<Time>
EmissionClock::next(Time until)
{
  while (m_pos == m_pending.size()) {
    if (m_secondStart + 1.0 >= until || m_rate <= 0.0) {
      return std::nullopt;
    }
    m_secondStart += 1.0;
    fillSecond();
  }
  Time t = m_pending[m_pos++];
  if (t >= until) {
    m_pos = m_pending.size();
    m_secondStart = until;
    return std::nullopt;
  }
  return t;
}

std::vector<Time>
emissionTimes(const ClientStream& stream, Time until)
{
  std::vector<Time> out;
  EmissionClock clock(stream);
  while (auto t = clock.next(until)) {
    out.push_back(*t);
  }
  return out;
}

} // namespace safsim::sim
